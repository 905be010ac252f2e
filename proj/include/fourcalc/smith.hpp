// Integer matrices, Smith normal form with a unimodular certificate,
// and abelianization of finite presentations. The reduction itself runs
// on arbitrary-precision integers: the transform matrices of a Smith
// reduction routinely outgrow 64 bits even for small inputs.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "fourcalc/presentation.hpp"

namespace fourcalc {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<i64> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMatrix identity(int n);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct BigMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> a;

  BigMatrix() = default;
  BigMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  mpz_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static BigMatrix identity(int n);

  friend bool operator==(const BigMatrix&, const BigMatrix&) = default;
};

BigMatrix to_big(const IntMatrix& m);

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
BigMatrix multiply(const BigMatrix& x, const BigMatrix& y);

// Exact determinant by fraction-free (Bareiss) elimination.
i64 determinant(const IntMatrix& m);
mpz_class determinant(const BigMatrix& m);

// u * input * v = d, with u and v unimodular and d diagonal with
// non-negative entries in a divisibility chain. u_det and v_det track
// the determinants through the elementary operations (always +-1).
struct SmithResult {
  BigMatrix u, v, d;
  std::vector<i64> divisors;  // positive diagonal entries, d[i] | d[i+1]
  int rank = 0;
  i64 u_det = 1;
  i64 v_det = 1;
};

SmithResult smith_normal_form(const IntMatrix& input);

// Isomorphism class of a finitely generated abelian group: free rank
// plus torsion orders in divisibility order.
struct AbelianGroupDescription {
  i64 free_rank = 0;
  std::vector<i64> torsion;  // each >= 2, torsion[i] | torsion[i+1]

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;

  // Canonical form of Z^free_rank + sum of Z/k for the given orders
  // (orders need not be in divisibility order; 1s are dropped).
  static AbelianGroupDescription canonical(i64 free_rank, std::vector<i64> orders);

  friend bool operator==(const AbelianGroupDescription&, const AbelianGroupDescription&) = default;
};

// Relator exponent-sum matrix: one row per relator, one column per
// generator.
IntMatrix exponent_matrix(const Presentation& p);

AbelianGroupDescription abelianize(const Presentation& p);

struct AbelianizeCertificate {
  AbelianGroupDescription group;
  IntMatrix exponent;  // the matrix that was reduced
  SmithResult snf;
};

AbelianizeCertificate abelianize_with_certificate(const Presentation& p);

}  // namespace fourcalc
