// Finitely presented groups: generator alphabet plus relator words,
// and the explicit presentation families used by the construction
// catalog (Y_n and Y_n(1/p, m/q)).
#pragma once

#include <string>
#include <vector>

#include "fourcalc/word.hpp"

namespace fourcalc {

struct Presentation {
  std::vector<std::string> generators;  // display names; id = index
  std::vector<Word> relators;           // stored freely reduced

  Presentation() = default;

  int add_generator(const std::string& name);
  int gen_index(const std::string& name) const;  // -1 if absent

  // Reduces and validates generator ids; throws UnknownGenerator.
  void add_relator(const Word& w);

  Word word_of(const std::string& name) const;  // single-generator word

  bool is_trivial_presentation() const { return generators.empty(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// p plus the single relator free_reduce(mu * gamma_push^m); the
// generator set and all existing relators are untouched.
Presentation luttinger_quotient(const Presentation& p, const Word& mu, const Word& gamma_push,
                                i64 m);

// The symplectic manifold Y_n obtained from the product of a genus-2
// and a genus-n surface by 2n+4 torus surgeries. Generators
// a1,a2,b1,b2,c1..cn,d1..dn; 18 + 4(n-2) relators. Requires n >= 2.
Presentation make_y_n_presentation(i64 n);

// The 2n-surgery family on (genus-n surface) x (torus). Generators
// a1..an, b1..bn, c, d. Requires n >= 2, p >= 1, q >= 1.
Presentation make_y_n_pq_presentation(i64 n, i64 p, i64 q, i64 m);

}  // namespace fourcalc
