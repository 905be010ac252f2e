#include "fourcalc/presentation.hpp"

#include "fourcalc/errors.hpp"

namespace fourcalc {

int Presentation::add_generator(const std::string& name) {
  if (gen_index(name) >= 0) throw BadParameter("duplicate generator name: " + name);
  generators.push_back(name);
  return static_cast<int>(generators.size()) - 1;
}

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i);
  return -1;
}

void Presentation::add_relator(const Word& w) {
  Word r = free_reduce(w);
  for (const Letter& l : r.letters)
    if (l.gen < 0 || l.gen >= static_cast<int>(generators.size()))
      throw UnknownGenerator("relator uses undeclared generator id " + std::to_string(l.gen));
  relators.push_back(r);
}

Word Presentation::word_of(const std::string& name) const {
  int g = gen_index(name);
  if (g < 0) throw UnknownGenerator("unknown generator: " + name);
  return gen_word(g);
}

Presentation luttinger_quotient(const Presentation& p, const Word& mu, const Word& gamma_push,
                                i64 m) {
  Presentation out = p;
  out.add_relator(concat(mu, word_power(gamma_push, m)));
  return out;
}

Presentation make_y_n_presentation(i64 n) {
  if (n < 2) throw BadParameter("make_y_n_presentation: n must be >= 2");
  Presentation p;
  int a1 = p.add_generator("a1");
  int a2 = p.add_generator("a2");
  int b1 = p.add_generator("b1");
  int b2 = p.add_generator("b2");
  std::vector<int> c(n), d(n);
  for (i64 j = 1; j <= n; ++j) c[j - 1] = p.add_generator("c" + std::to_string(j));
  for (i64 j = 1; j <= n; ++j) d[j - 1] = p.add_generator("d" + std::to_string(j));

  auto W = [](int g, i64 e = 1) { return gen_word(g, e); };
  // relator for "[x, y] = z": [x, y] z^-1
  auto defining = [&](const Word& x, const Word& y, int z) {
    p.add_relator(concat(commutator(x, y), W(z, -1)));
  };
  auto commuting = [&](int x, int y) { p.add_relator(commutator(W(x), W(y))); };

  // surgery relations on the genus-2 generators
  defining(W(b1, -1), W(d[0], -1), a1);
  defining(W(a1, -1), W(d[0]), b1);
  defining(W(b2, -1), W(d[1], -1), a2);
  defining(W(a2, -1), W(d[1]), b2);
  // surgery relations on c1, d1, c2, d2
  defining(W(d[0], -1), W(b2, -1), c[0]);
  defining(W(c[0], -1), W(b2), d[0]);
  defining(W(d[1], -1), W(b1, -1), c[1]);
  defining(W(c[1], -1), W(b1), d[1]);
  // commuting relations
  commuting(a1, c[0]);
  commuting(a1, c[1]);
  commuting(a1, d[1]);
  commuting(b1, c[0]);
  commuting(a2, c[0]);
  commuting(a2, c[1]);
  commuting(a2, d[0]);
  commuting(b2, c[1]);
  // surface relations
  p.add_relator(concat(commutator(W(a1), W(b1)), commutator(W(a2), W(b2))));
  {
    Word s;
    for (i64 j = 0; j < n; ++j) s = concat(s, commutator(W(c[j]), W(d[j])));
    p.add_relator(s);
  }
  // the j = 3..n families
  for (i64 j = 3; j <= n; ++j) {
    defining(W(a1, -1), W(d[j - 1], -1), c[j - 1]);
    defining(W(a2, -1), W(c[j - 1], -1), d[j - 1]);
  }
  for (i64 j = 3; j <= n; ++j) {
    commuting(b1, c[j - 1]);
    commuting(b2, d[j - 1]);
  }
  return p;
}

Presentation make_y_n_pq_presentation(i64 n, i64 p_coef, i64 q_coef, i64 m) {
  if (n < 2) throw BadParameter("make_y_n_pq_presentation: n must be >= 2");
  if (p_coef < 1 || q_coef < 1)
    throw BadParameter("make_y_n_pq_presentation: p and q must be >= 1");
  Presentation p;
  std::vector<int> a(n), b(n);
  for (i64 i = 1; i <= n; ++i) a[i - 1] = p.add_generator("a" + std::to_string(i));
  for (i64 i = 1; i <= n; ++i) b[i - 1] = p.add_generator("b" + std::to_string(i));
  int c = p.add_generator("c");
  int d = p.add_generator("d");

  auto W = [](int g, i64 e = 1) { return gen_word(g, e); };

  // [b_i^-1, d^-1] = a_i and [a_i^-1, d] = b_i for i = 1..n-1
  for (i64 i = 0; i < n - 1; ++i) {
    p.add_relator(concat(commutator(W(b[i], -1), W(d, -1)), W(a[i], -1)));
    p.add_relator(concat(commutator(W(a[i], -1), W(d)), W(b[i], -1)));
  }
  // [d^-1, b_n^-1] = c^p
  p.add_relator(concat(commutator(W(d, -1), W(b[n - 1], -1)), W(c, -p_coef)));
  // [c^-1, b_n]^-m = d^q
  p.add_relator(concat(word_power(commutator(W(c, -1), W(b[n - 1])), checked_neg(m)),
                       W(d, -q_coef)));
  // commuting family
  for (i64 i = 0; i < n - 1; ++i) {
    p.add_relator(commutator(W(a[i]), W(c)));
    p.add_relator(commutator(W(b[i]), W(c)));
  }
  p.add_relator(commutator(W(a[n - 1]), W(c)));
  p.add_relator(commutator(W(a[n - 1]), W(d)));
  // surface relation and [c, d] = 1
  {
    Word s;
    for (i64 i = 0; i < n; ++i) s = concat(s, commutator(W(a[i]), W(b[i])));
    p.add_relator(s);
  }
  p.add_relator(commutator(W(c), W(d)));
  return p;
}

}  // namespace fourcalc
