#include "fourcalc/geography.hpp"

#include "fourcalc/errors.hpp"

namespace fourcalc {

std::vector<RegionPoint> extend(const LatticePoint& base, i64 chi_max) {
  if (chi_max < 1) throw BadParameter("extend: chi_max must be >= 1");
  std::vector<RegionPoint> out;
  for (i64 chi = 1; chi <= chi_max; ++chi) {
    i64 cap = checked_mul(8, chi);
    for (i64 c = 0; c <= cap; ++c) {
      RegionPoint p;
      p.chi_h = checked_add(base.chi_h, chi);
      p.c1_sq = checked_add(base.c1_sq, c);
      p.parity = c < cap ? FormParity::OddForm : FormParity::PerPaper;
      p.citation = "extension region chi >= 1, 0 <= c <= 8 chi over " + base.realized_by;
      out.push_back(std::move(p));
    }
  }
  return out;
}

i64 l_sigma(i64 sigma_x, i64 sigma) {
  if (sigma < 0 || sigma > sigma_x)
    throw BadParameter("l_sigma: need 0 <= sigma <= sigma(X)");
  // ceil((sigma_x - sigma)/8 - 1) = ceil((sigma_x - sigma - 8)/8)
  return ceil_div(checked_sub(checked_sub(sigma_x, sigma), 8), 8);
}

i64 exotic_threshold(i64 b2_plus_x, i64 sigma_x, i64 sigma) {
  i64 base = checked_add(b2_plus_x, checked_add(checked_mul(2, l_sigma(sigma_x, sigma)), 2));
  return base % 2 != 0 ? base : checked_add(base, 1);
}

BmyPosition bmy_position(i64 chi_h, i64 c1_sq) {
  if (chi_h < 1) throw BadParameter("bmy_position: chi_h must be >= 1");
  i64 line = checked_mul(9, chi_h);
  if (c1_sq == line) return BmyPosition::OnBMYLine;
  return c1_sq < line ? BmyPosition::Below : BmyPosition::Violates;
}

std::vector<ScanRow> lattice_scan(const ScanWindow& window,
                                  const std::vector<LatticePoint>& bases) {
  if (window.chi_min > window.chi_max || window.c_min > window.c_max)
    throw BadParameter("lattice_scan: empty or inverted window");
  std::vector<ScanRow> rows;
  for (i64 chi = window.chi_min; chi <= window.chi_max; ++chi)
    for (i64 c = window.c_min; c <= window.c_max; ++c) {
      ScanRow row;
      row.chi_h = chi;
      row.c1_sq = c;
      for (const LatticePoint& b : bases) {
        bool hit = false;
        if (chi == b.chi_h && c == b.c1_sq) {
          hit = true;
        } else if (chi > b.chi_h) {
          i64 dc = checked_sub(c, b.c1_sq);
          hit = dc >= 0 && dc <= checked_mul(8, checked_sub(chi, b.chi_h));
        }
        if (hit) {
          row.realized = true;
          row.citation = b.realized_by;
          break;
        }
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::string csv = "chi_h,c1_sq,realized,citation\n";
  for (const ScanRow& r : rows) {
    csv += std::to_string(r.chi_h) + "," + std::to_string(r.c1_sq) + "," +
           (r.realized ? "1" : "0") + "," + r.citation + "\n";
  }
  return csv;
}

}  // namespace fourcalc
