#include "fourcalc/invariants.hpp"

namespace fourcalc {

std::string to_string(Spin s) {
  switch (s) {
    case Spin::Spin:
      return "spin";
    case Spin::NonSpin:
      return "nonspin";
    default:
      return "unknown";
  }
}

InvariantVector derive(i64 e, i64 sigma, i64 b1, Spin spin) {
  InvariantVector v;
  v.e = e;
  v.sigma = sigma;
  v.b1 = b1;
  v.spin = spin;

  v.b2 = checked_add(checked_sub(e, 2), checked_mul(2, b1));
  v.c1_sq = checked_add(checked_mul(2, e), checked_mul(3, sigma));

  i64 es = checked_add(e, sigma);
  if (es % 4 == 0) v.chi_h = es / 4;

  // b2 and sigma must have equal parity for the form to split.
  if ((checked_add(v.b2, sigma) % 2) == 0) {
    v.b2_plus = checked_add(v.b2, sigma) / 2;
    v.b2_minus = checked_sub(v.b2, sigma) / 2;
  }

  v.realizable = v.b2 >= 0 && v.b2_plus && *v.b2_plus >= 0 && v.b2_minus && *v.b2_minus >= 0;
  if (b1 < 0) v.realizable = false;
  return v;
}

ConsistencyReport consistency_check(const InvariantVector& v, i64 claimed_c1_sq,
                                    std::optional<i64> claimed_chi_h) {
  ConsistencyReport r;
  if (claimed_c1_sq != v.c1_sq) {
    r.pass = false;
    r.violations.push_back("c1^2 = 2e + 3*sigma: claimed " + std::to_string(claimed_c1_sq) +
                           ", derived " + std::to_string(v.c1_sq));
  }
  if (claimed_chi_h) {
    if (!v.chi_h) {
      r.pass = false;
      r.violations.push_back("chi_h claimed " + std::to_string(*claimed_chi_h) +
                             " but (e + sigma)/4 is not an integer");
    } else if (*claimed_chi_h != *v.chi_h) {
      r.pass = false;
      r.violations.push_back("chi_h = (e + sigma)/4: claimed " + std::to_string(*claimed_chi_h) +
                             ", derived " + std::to_string(*v.chi_h));
    }
  }
  // 12*chi_h - c1^2 = e is implied by the definitions; re-evaluate both
  // sides anyway so a report is trustworthy on its own.
  if (v.chi_h) {
    i64 lhs = checked_sub(checked_mul(12, *v.chi_h), v.c1_sq);
    if (lhs != v.e) {
      r.pass = false;
      r.violations.push_back("12*chi_h - c1^2 = e: " + std::to_string(lhs) + " vs " +
                             std::to_string(v.e));
    }
  }
  return r;
}

HomeoType homeomorphism_type(const InvariantVector& v) {
  if (!v.simply_connected) throw PreconditionViolated("homeomorphism_type: not simply connected");
  if (v.b1 != 0) throw PreconditionViolated("homeomorphism_type: b1 != 0");
  if (v.spin != Spin::NonSpin)
    throw PreconditionViolated("homeomorphism_type: spin parity must be NonSpin");
  if (!v.b2_plus || !v.b2_minus)
    throw PreconditionViolated("homeomorphism_type: sigma and b2 have different parity");
  if (*v.b2_plus < 1 || *v.b2_minus < 0)
    throw PreconditionViolated("homeomorphism_type: form not odd indefinite (b2+ >= 1, b2- >= 0)");
  return HomeoType{*v.b2_plus, *v.b2_minus};
}

}  // namespace fourcalc
