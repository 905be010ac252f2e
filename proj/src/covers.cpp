#include "fourcalc/covers.hpp"

#include <numeric>

namespace fourcalc {

IntersectionForm IntersectionForm::diagonal(std::vector<std::string> names,
                                            std::vector<i64> diag) {
  if (names.size() != diag.size()) throw BasisMismatch("diagonal form: name/entry count differ");
  IntersectionForm f;
  f.basis_names = std::move(names);
  f.matrix.assign(f.basis_names.size(), std::vector<i64>(f.basis_names.size(), 0));
  for (size_t i = 0; i < diag.size(); ++i) f.matrix[i][i] = diag[i];
  return f;
}

int IntersectionForm::index_of(const std::string& name) const {
  for (size_t i = 0; i < basis_names.size(); ++i)
    if (basis_names[i] == name) return static_cast<int>(i);
  throw BasisMismatch("no basis element named " + name);
}

void IntersectionForm::validate() const {
  if (matrix.size() != basis_names.size()) throw BasisMismatch("form matrix size mismatch");
  for (size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != basis_names.size()) throw BasisMismatch("form matrix not square");
    for (size_t j = 0; j < i; ++j)
      if (matrix[i][j] != matrix[j][i]) throw BasisMismatch("form matrix not symmetric");
  }
}

DivisorClass DivisorClass::basis_vector(size_t n, size_t i, Rational c) {
  DivisorClass d = zero(n);
  d.coefficients[i] = c;
  return d;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (a.coefficients.size() != b.coefficients.size())
    throw BasisMismatch("divisor classes over different bases");
  DivisorClass out = a;
  for (size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
  return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  if (a.coefficients.size() != b.coefficients.size())
    throw BasisMismatch("divisor classes over different bases");
  DivisorClass out = a;
  for (size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] -= b.coefficients[i];
  return out;
}

DivisorClass operator*(const Rational& s, const DivisorClass& d) {
  DivisorClass out = d;
  for (Rational& c : out.coefficients) c *= s;
  return out;
}

Rational pairing(const DivisorClass& d1, const DivisorClass& d2, const IntersectionForm& form) {
  form.validate();
  if (d1.coefficients.size() != form.size() || d2.coefficients.size() != form.size())
    throw BasisMismatch("divisor class dimension does not match pairing form");
  Rational acc;
  for (size_t i = 0; i < form.size(); ++i) {
    if (d1.coefficients[i] == Rational(0)) continue;
    for (size_t j = 0; j < form.size(); ++j) {
      if (form.matrix[i][j] == 0) continue;
      acc += d1.coefficients[i] * Rational(form.matrix[i][j]) * d2.coefficients[j];
    }
  }
  return acc;
}

void CoverSpec::validate() const {
  if (group_order < 1) throw BadParameter("cover: group order must be positive");
  for (const BranchComponent& b : branch_components) {
    if (b.ram_index < 2) throw BadParameter("cover: ramification index must be >= 2");
    if (group_order % b.ram_index != 0)
      throw BadParameter("cover: ramification index must divide the group order");
  }
  for (const Stratum& s : strata) {
    if (s.fiber_cardinality < 1) throw BadParameter("cover: fiber cardinality must be positive");
    if (group_order % s.fiber_cardinality != 0)
      throw BadParameter("cover: fiber cardinality must divide the group order");
  }
}

Rational pardini_k_squared(const CoverSpec& spec) {
  spec.validate();
  DivisorClass total = spec.k_base;
  for (const BranchComponent& b : spec.branch_components)
    total = total + Rational(b.ram_index - 1, b.ram_index) * b.cls;
  return Rational(spec.group_order) * pairing(total, total, spec.base_form);
}

i64 stratified_euler(const CoverSpec& spec) {
  spec.validate();
  i64 e = 0;
  for (const Stratum& s : spec.strata)
    e = checked_add(e, checked_mul(s.fiber_cardinality, s.euler));
  return e;
}

i64 riemann_hurwitz_genus(i64 degree, i64 base_genus, const std::vector<i64>& branch_ram) {
  if (degree < 1) throw BadParameter("riemann_hurwitz_genus: degree must be >= 1");
  if (base_genus < 0) throw BadParameter("riemann_hurwitz_genus: base genus must be >= 0");
  // rhs = d(2g_b - 2) + sum d(m-1)/m, each term integral since m | d
  i64 rhs = checked_mul(degree, checked_sub(checked_mul(2, base_genus), 2));
  for (i64 m : branch_ram) {
    if (m < 2) throw BadParameter("riemann_hurwitz_genus: ramification index must be >= 2");
    if (degree % m != 0)
      throw BadParameter("riemann_hurwitz_genus: ramification index must divide the degree");
    rhs = checked_add(rhs, checked_mul(degree / m, checked_sub(m, 1)));
  }
  if (rhs % 2 != 0)
    throw NonIntegralGenus("2g - 2 evaluates to the odd number " + std::to_string(rhs));
  i64 g = (rhs + 2) / 2;
  if (g < 0) throw NonIntegralGenus("negative genus " + std::to_string(g));
  return g;
}

i64 singular_fiber_budget(i64 e_total, i64 e_fiber, i64 e_base) {
  return checked_sub(e_total, checked_mul(e_fiber, e_base));
}

CoverSpec quadrangle_spec(i64 n) {
  if (n < 2) throw BadParameter("quadrangle_spec: n must be > 1");
  CoverSpec spec;
  spec.group_order = checked_mul(n, n);
  spec.base_form = IntersectionForm::diagonal({"H", "E0", "E1", "E2", "E3"}, {1, -1, -1, -1, -1});
  auto cls = [&](i64 h, i64 e0, i64 e1, i64 e2, i64 e3) {
    DivisorClass d = DivisorClass::zero(5);
    d.coefficients = {Rational(h), Rational(e0), Rational(e1), Rational(e2), Rational(e3)};
    return d;
  };
  spec.k_base = cls(-3, 1, 1, 1, 1);
  // strict transforms of the six quadrangle lines ...
  spec.branch_components.push_back({cls(1, 0, 0, -1, -1), n});   // L1 through P2, P3
  spec.branch_components.push_back({cls(1, 0, -1, 0, -1), n});   // L2 through P1, P3
  spec.branch_components.push_back({cls(1, 0, -1, -1, 0), n});   // L3 through P1, P2
  spec.branch_components.push_back({cls(1, -1, -1, 0, 0), n});   // L1' through P0, P1
  spec.branch_components.push_back({cls(1, -1, 0, -1, 0), n});   // L2' through P0, P2
  spec.branch_components.push_back({cls(1, -1, 0, 0, -1), n});   // L3' through P0, P3
  // ... and the four exceptional curves
  for (size_t i = 0; i < 4; ++i)
    spec.branch_components.push_back({DivisorClass::basis_vector(5, i + 1), n});
  // Stratification of the blown-up plane by the ten-line divisor:
  // the open complement (e = 7 - 5), the ten open lines (10 spheres
  // minus twice the 15 nodes), and the nodes themselves, where the two
  // local stabilizers generate the whole group.
  spec.strata.push_back({2, spec.group_order});
  spec.strata.push_back({-10, n});
  spec.strata.push_back({15, 1});
  return spec;
}

CoverSurface quadrangle_cover_surface(i64 n) {
  if (n <= 1 || std::gcd(n, static_cast<i64>(6)) != 1)
    throw BadParameter("quadrangle_cover_surface: n must be > 1 and relatively prime with 6");
  CoverSpec spec = quadrangle_spec(n);
  i64 c1_sq = pardini_k_squared(spec).as_integer();
  i64 e = stratified_euler(spec);
  // no direct signature formula for the cover; recover it from c1^2 = 2e + 3*sigma
  i64 sigma = exact_div(checked_sub(c1_sq, checked_mul(2, e)), 3);
  i64 q = (n - 1) / 2;
  CoverSurface out;
  out.invariants = derive(e, sigma, checked_mul(2, q), Spin::NonSpin);
  out.invariants.symplectic = true;
  out.invariants.minimal = true;
  out.q = q;
  out.fibration = FibrationData{n - 1, (n - 1) / 2, 3};
  return out;
}

std::pair<i64, i64> hirzebruch_tower(i64 m) {
  if (m < 2) throw BadParameter("hirzebruch_tower: m must be >= 2");
  i64 scale = checked_pow(5, m - 2);
  return {checked_mul(45, scale), checked_mul(15, scale)};
}

}  // namespace fourcalc
