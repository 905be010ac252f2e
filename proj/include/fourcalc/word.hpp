// Words over a generator alphabet, stored as exponent runs.
#pragma once

#include <cstdlib>
#include <vector>

#include "fourcalc/checked.hpp"

namespace fourcalc {

struct Letter {
  int gen = 0;   // interned generator id
  i64 exp = 1;   // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}

  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
};

// Canonical freely reduced form: adjacent runs merged, zero exponents
// dropped. Idempotent.
Word free_reduce(const Word& w);

Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);
Word word_power(const Word& w, i64 k);

// [x, y] = x^-1 y^-1 x y. This bracket convention is fixed project-wide;
// abelianized consequences do not depend on it.
Word commutator(const Word& x, const Word& y);

inline Word gen_word(int g, i64 e = 1) {
  Word w;
  if (e != 0) w.letters.push_back({g, e});
  return w;
}

// Letter count of the expanded word (sum of |exponent|).
i64 word_length(const Word& w);

// Cyclic reduction: conjugation is stripped so the first and last runs
// no longer cancel. Result is freely reduced.
Word cyclic_reduce(const Word& w);

}  // namespace fourcalc
