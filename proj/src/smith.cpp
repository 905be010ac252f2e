#include "fourcalc/smith.hpp"

#include <algorithm>

namespace fourcalc {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::identity(int n) {
  BigMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix b(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) b.a[i] = static_cast<long>(m.a[i]);
  return b;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw BadParameter("matrix product shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      i64 xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(xv, y.at(k, j)));
    }
  return r;
}

BigMatrix multiply(const BigMatrix& x, const BigMatrix& y) {
  if (x.cols != y.rows) throw BadParameter("matrix product shape mismatch");
  BigMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const mpz_class& xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
    }
  return r;
}

i64 determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw BadParameter("determinant of non-square matrix");
  mpz_class d = determinant(to_big(m));
  if (!d.fits_slong_p()) throw OverflowError("determinant does not fit in 64 bits");
  return d.get_si();
}

mpz_class determinant(const BigMatrix& m) {
  if (m.rows != m.cols) throw BadParameter("determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  BigMatrix w = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

namespace {

struct SnfWorker {
  BigMatrix a, u, v;
  i64 u_det = 1, v_det = 1;

  explicit SnfWorker(const IntMatrix& input)
      : a(to_big(input)),
        u(BigMatrix::identity(input.rows)),
        v(BigMatrix::identity(input.cols)) {}

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < a.cols; ++j) std::swap(a.at(r1, j), a.at(r2, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(r1, j), u.at(r2, j));
    u_det = -u_det;
  }
  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < a.rows; ++i) std::swap(a.at(i, c1), a.at(i, c2));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, c1), v.at(i, c2));
    v_det = -v_det;
  }
  void negate_row(int r) {
    for (int j = 0; j < a.cols; ++j) a.at(r, j) = -a.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
    u_det = -u_det;
  }
  // row r1 += q * row r2
  void add_row(int r1, int r2, const mpz_class& q) {
    if (q == 0) return;
    for (int j = 0; j < a.cols; ++j) a.at(r1, j) += q * a.at(r2, j);
    for (int j = 0; j < u.cols; ++j) u.at(r1, j) += q * u.at(r2, j);
  }
  // col c1 += q * col c2
  void add_col(int c1, int c2, const mpz_class& q) {
    if (q == 0) return;
    for (int i = 0; i < a.rows; ++i) a.at(i, c1) += q * a.at(i, c2);
    for (int i = 0; i < v.rows; ++i) v.at(i, c1) += q * v.at(i, c2);
  }

  // Nearest-integer quotient keeps remainders at most |b|/2, which
  // bounds entry growth during reduction.
  static mpz_class near_quot(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > abs(b)) ++q;
    return q;
  }

  bool find_pivot(int t, int& pr, int& pc) const {
    pr = -1;
    pc = -1;
    mpz_class best = 0;
    for (int i = t; i < a.rows; ++i)
      for (int j = t; j < a.cols; ++j) {
        const mpz_class& x = a.at(i, j);
        if (x == 0) continue;
        mpz_class ax = abs(x);
        if (pr < 0 || ax < best) {
          best = ax;
          pr = i;
          pc = j;
        }
      }
    return pr >= 0;
  }

  void run() {
    int n = std::min(a.rows, a.cols);
    for (int t = 0; t < n; ++t) {
      int pr, pc;
      if (!find_pivot(t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      for (;;) {
        bool dirty = false;
        for (int i = t + 1; i < a.rows; ++i) {
          if (a.at(i, t) == 0) continue;
          add_row(i, t, -near_quot(a.at(i, t), a.at(t, t)));
          if (a.at(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < a.cols; ++j) {
          if (a.at(t, j) == 0) continue;
          add_col(j, t, -near_quot(a.at(t, j), a.at(t, t)));
          if (a.at(t, j) != 0) dirty = true;
        }
        if (!dirty) break;
        // a smaller remainder now exists somewhere in row/col t
        int rr, cc;
        find_pivot(t, rr, cc);
        swap_rows(t, rr);
        swap_cols(t, cc);
      }
      if (a.at(t, t) < 0) negate_row(t);
      // enforce the divisibility chain: if some later entry is not a
      // multiple of the pivot, fold its row in and redo this step
      if (t + 1 < n) {
        bool redo = false;
        for (int i = t + 1; i < a.rows && !redo; ++i)
          for (int j = t + 1; j < a.cols && !redo; ++j)
            if (a.at(i, j) % a.at(t, t) != 0) {
              add_row(t, i, 1);
              redo = true;
            }
        if (redo) --t;
      }
    }
  }
};

i64 narrow(const mpz_class& x) {
  if (!x.fits_slong_p()) throw OverflowError("smith divisor does not fit in 64 bits");
  return x.get_si();
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  SnfWorker w(input);
  w.run();
  SmithResult r;
  r.u = std::move(w.u);
  r.v = std::move(w.v);
  r.d = std::move(w.a);
  r.u_det = w.u_det;
  r.v_det = w.v_det;
  int n = std::min(r.d.rows, r.d.cols);
  for (int i = 0; i < n; ++i)
    if (r.d.at(i, i) != 0) r.divisors.push_back(narrow(r.d.at(i, i)));
  r.rank = static_cast<int>(r.divisors.size());
  return r;
}

std::string AbelianGroupDescription::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
  for (i64 t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(t);
  }
  return s;
}

AbelianGroupDescription AbelianGroupDescription::canonical(i64 free_rank, std::vector<i64> orders) {
  std::erase_if(orders, [](i64 t) { return t == 1; });
  for (i64 t : orders)
    if (t < 1) throw BadParameter("torsion order must be >= 1");
  int n = static_cast<int>(orders.size());
  IntMatrix diag(n, n);
  for (int i = 0; i < n; ++i) diag.at(i, i) = orders[static_cast<size_t>(i)];
  SmithResult snf = smith_normal_form(diag);
  AbelianGroupDescription g;
  g.free_rank = free_rank;
  for (i64 t : snf.divisors)
    if (t > 1) g.torsion.push_back(t);
  return g;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(static_cast<int>(p.relators.size()), static_cast<int>(p.generators.size()));
  for (int i = 0; i < m.rows; ++i)
    for (const Letter& l : p.relators[static_cast<size_t>(i)].letters)
      m.at(i, l.gen) = checked_add(m.at(i, l.gen), l.exp);
  return m;
}

AbelianGroupDescription abelianize(const Presentation& p) {
  return abelianize_with_certificate(p).group;
}

AbelianizeCertificate abelianize_with_certificate(const Presentation& p) {
  AbelianizeCertificate cert;
  cert.exponent = exponent_matrix(p);
  cert.snf = smith_normal_form(cert.exponent);
  cert.group.free_rank =
      static_cast<i64>(p.generators.size()) - static_cast<i64>(cert.snf.rank);
  for (i64 t : cert.snf.divisors)
    if (t > 1) cert.group.torsion.push_back(t);
  return cert;
}

}  // namespace fourcalc
