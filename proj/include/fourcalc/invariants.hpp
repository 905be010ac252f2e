// Exact arithmetic on the numerical invariants of a closed oriented
// 4-manifold: Euler characteristic e, signature sigma, first Betti
// number b1, and everything derivable from them.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourcalc/checked.hpp"

namespace fourcalc {

enum class Spin { Spin, NonSpin, Unknown };

std::string to_string(Spin s);

// A vector of invariants with all derived quantities computed. The
// derived fields are functions of (e, sigma, b1); the flags are declared
// data carried alongside. chi_h is absent (not rounded) when e + sigma
// is not divisible by 4.
struct InvariantVector {
  // inputs
  i64 e = 0;
  i64 sigma = 0;
  i64 b1 = 0;
  Spin spin = Spin::Unknown;
  bool simply_connected = false;
  bool symplectic = false;
  bool minimal = false;

  // derived
  i64 b2 = 0;                     // e - 2 + 2*b1
  i64 c1_sq = 0;                  // 2e + 3*sigma
  std::optional<i64> chi_h;       // (e + sigma)/4 when integral
  std::optional<i64> b2_plus;     // (b2 + sigma)/2 when sigma = b2 mod 2
  std::optional<i64> b2_minus;    // (b2 - sigma)/2, same condition
  bool realizable = false;        // b2 >= 0, parity ok, b2_plus/minus >= 0

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

InvariantVector derive(i64 e, i64 sigma, i64 b1, Spin spin = Spin::Unknown);

struct ConsistencyReport {
  bool pass = true;
  std::vector<std::string> violations;  // each lists both sides
};

ConsistencyReport consistency_check(const InvariantVector& v, i64 claimed_c1_sq,
                                    std::optional<i64> claimed_chi_h = std::nullopt);

// Freedman type of a simply connected nonspin 4-manifold with odd
// indefinite form: connected sum of a copies of the projective plane
// and b copies with reversed orientation.
struct HomeoType {
  i64 a = 0;
  i64 b = 0;
  friend bool operator==(const HomeoType&, const HomeoType&) = default;
};

HomeoType homeomorphism_type(const InvariantVector& v);

}  // namespace fourcalc
