// Invariants of abelian Galois covers branched over line arrangements:
// divisor intersection arithmetic, the canonical-class square formula,
// stabilizer-stratified Euler characteristics, Riemann-Hurwitz genus,
// and the singular-fiber budget.
#pragma once

#include <string>
#include <vector>

#include "fourcalc/invariants.hpp"
#include "fourcalc/rational.hpp"

namespace fourcalc {

struct IntersectionForm {
  std::vector<std::string> basis_names;
  std::vector<std::vector<i64>> matrix;  // symmetric

  static IntersectionForm diagonal(std::vector<std::string> names, std::vector<i64> diag);

  size_t size() const { return basis_names.size(); }
  int index_of(const std::string& name) const;  // throws BasisMismatch
  void validate() const;
};

struct DivisorClass {
  std::vector<Rational> coefficients;

  static DivisorClass zero(size_t n) { return DivisorClass{std::vector<Rational>(n)}; }
  static DivisorClass basis_vector(size_t n, size_t i, Rational c = Rational(1));

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(const Rational& s, const DivisorClass& d);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

// Bilinear extension of the form to rational classes.
Rational pairing(const DivisorClass& d1, const DivisorClass& d2, const IntersectionForm& form);

struct BranchComponent {
  DivisorClass cls;
  i64 ram_index = 2;  // order of the stabilizer along the component
};

struct Stratum {
  i64 euler = 0;
  i64 fiber_cardinality = 1;
};

struct CoverSpec {
  i64 group_order = 1;
  IntersectionForm base_form;
  DivisorClass k_base;
  std::vector<BranchComponent> branch_components;
  std::vector<Stratum> strata;  // must partition the base

  void validate() const;  // ram indices and fiber sizes divide group_order
};

// K_X^2 = g * (K_Y + sum over components of ((m-1)/m) * D)^2
Rational pardini_k_squared(const CoverSpec& spec);

// e(X) = sum over strata of fiber_cardinality * euler
i64 stratified_euler(const CoverSpec& spec);

// Solves 2g - 2 = d(2g_b - 2) + sum of d(1 - 1/m) for g. Each
// ramification index must divide the degree; throws NonIntegralGenus
// when the right side is odd or gives g < 0.
i64 riemann_hurwitz_genus(i64 degree, i64 base_genus, const std::vector<i64>& branch_ram);

// Total Euler deviation of the singular fibers of a fibration:
// e_total - e_fiber * e_base.
i64 singular_fiber_budget(i64 e_total, i64 e_fiber, i64 e_base);

// The (Z/nZ)^2 cover of the plane blown up in the four vertices of a
// complete quadrangle, branched over the ten lines.
CoverSpec quadrangle_spec(i64 n);

struct FibrationData {
  i64 fiber_genus = 0;
  i64 base_genus = 0;
  i64 singular_fibers = 0;
  friend bool operator==(const FibrationData&, const FibrationData&) = default;
};

struct CoverSurface {
  InvariantVector invariants;
  i64 q = 0;  // irregularity
  FibrationData fibration;
};

// Invariants of the quadrangle-cover surface with group (Z/nZ)^2,
// computed through pardini_k_squared and stratified_euler (never the
// closed forms). Requires n > 1 and gcd(n, 6) = 1.
CoverSurface quadrangle_cover_surface(i64 n);

// (c1^2, e) of the (Z/5Z)^m tower over the six-line configuration,
// m >= 2.
std::pair<i64, i64> hirzebruch_tower(i64 m);

}  // namespace fourcalc
