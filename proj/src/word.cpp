#include "fourcalc/word.hpp"

namespace fourcalc {

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w.letters) {
    if (l.exp == 0) continue;
    if (!out.letters.empty() && out.letters.back().gen == l.gen) {
      out.letters.back().exp = checked_add(out.letters.back().exp, l.exp);
      if (out.letters.back().exp == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(out);
}

Word inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->gen, checked_neg(it->exp)});
  return out;
}

Word word_power(const Word& w, i64 k) {
  if (k == 0) return Word{};
  Word base = k > 0 ? w : inverse(w);
  i64 n = k > 0 ? k : checked_neg(k);
  Word out;
  for (i64 i = 0; i < n; ++i) out = concat(out, base);
  return out;
}

Word commutator(const Word& x, const Word& y) {
  return concat(concat(inverse(x), inverse(y)), concat(x, y));
}

i64 word_length(const Word& w) {
  i64 n = 0;
  for (const Letter& l : w.letters) n = checked_add(n, l.exp < 0 ? checked_neg(l.exp) : l.exp);
  return n;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  while (r.letters.size() >= 2 && r.letters.front().gen == r.letters.back().gen) {
    i64 a = r.letters.front().exp;
    i64 b = r.letters.back().exp;
    if ((a > 0) == (b > 0)) break;  // same sign after reduction cannot happen; opposite cancels
    i64 cancel = std::min(std::abs(a), std::abs(b));
    r.letters.front().exp = a > 0 ? a - cancel : a + cancel;
    r.letters.back().exp = b > 0 ? b - cancel : b + cancel;
    if (r.letters.back().exp == 0) r.letters.pop_back();
    if (!r.letters.empty() && r.letters.front().exp == 0) r.letters.erase(r.letters.begin());
    r = free_reduce(r);
  }
  return r;
}

}  // namespace fourcalc
