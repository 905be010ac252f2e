// Lattice-level reasoning on the (chi_h, c1^2) plane: the extension
// region above a realized point, the exotic-threshold formula, the
// Bogomolov-Miyaoka-Yau line, and window scans.
#pragma once

#include <string>
#include <vector>

#include "fourcalc/checked.hpp"

namespace fourcalc {

struct LatticePoint {
  i64 chi_h = 0;
  i64 c1_sq = 0;
  std::string realized_by;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

enum class FormParity { OddForm, PerPaper };

struct RegionPoint {
  i64 chi_h = 0;
  i64 c1_sq = 0;
  FormParity parity = FormParity::OddForm;
  std::string citation;
  friend bool operator==(const RegionPoint&, const RegionPoint&) = default;
};

// All points (base.chi_h + chi, base.c1_sq + c) with 1 <= chi <= chi_max
// and 0 <= c <= 8*chi, ordered by chi then c. A point with c < 8*chi is
// tagged OddForm per the quoted side condition; the c = 8*chi boundary
// inherits the base form parity and is tagged PerPaper.
std::vector<RegionPoint> extend(const LatticePoint& base, i64 chi_max);

// l(sigma) = ceil((sigma_x - sigma)/8 - 1), exact on integers.
// Requires 0 <= sigma <= sigma_x.
i64 l_sigma(i64 sigma_x, i64 sigma);

// The minimal odd k with k >= b2_plus_x + 2*l(sigma) + 2.
i64 exotic_threshold(i64 b2_plus_x, i64 sigma_x, i64 sigma);

enum class BmyPosition { OnBMYLine, Below, Violates };

BmyPosition bmy_position(i64 chi_h, i64 c1_sq);

struct ScanWindow {
  i64 chi_min = 0, chi_max = 0, c_min = 0, c_max = 0;
};

struct ScanRow {
  i64 chi_h = 0;
  i64 c1_sq = 0;
  bool realized = false;
  std::string citation;
};

// Marks every window point realized or not against the extension
// regions of the bases (a base realizes its own point too). Rows are
// ordered chi ascending, then c ascending.
std::vector<ScanRow> lattice_scan(const ScanWindow& window,
                                  const std::vector<LatticePoint>& bases);

// chi_h,c1_sq,realized,citation with LF endings and a mandatory header.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

}  // namespace fourcalc
