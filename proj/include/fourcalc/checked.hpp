// Exact 64-bit integer arithmetic; any overflow is a hard error,
// never a wrapped value.
#pragma once

#include <cstdint>

#include "fourcalc/errors.hpp"

namespace fourcalc {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in +");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in -");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in *");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

inline i64 checked_pow(i64 base, i64 exp) {
  if (exp < 0) throw BadParameter("checked_pow: negative exponent");
  i64 r = 1;
  for (i64 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// Floor/ceiling division with mathematically exact semantics for
// negative operands (C++ '/' truncates toward zero).
inline i64 floor_div(i64 a, i64 b) {
  if (b == 0) throw BadParameter("division by zero");
  i64 q = a / b;
  i64 r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline i64 ceil_div(i64 a, i64 b) {
  if (b == 0) throw BadParameter("division by zero");
  return checked_neg(floor_div(checked_neg(a), b));
}

// Division that must be exact; used where a rational result would
// indicate a broken invariant upstream.
inline i64 exact_div(i64 a, i64 b) {
  if (b == 0) throw BadParameter("division by zero");
  if (a % b != 0) throw BadParameter("exact_div: not divisible");
  return a / b;
}

}  // namespace fourcalc
