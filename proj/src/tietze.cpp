#include "fourcalc/tietze.hpp"

#include <algorithm>
#include <map>

namespace fourcalc {

namespace {

// Expanded letters (exponent +-1) are easier to rotate and splice.
using Exp = std::vector<std::pair<int, int>>;  // (gen, sign)

Exp expand(const Word& w) {
  Exp out;
  for (const Letter& l : w.letters) {
    int s = l.exp > 0 ? 1 : -1;
    i64 n = l.exp > 0 ? l.exp : -l.exp;
    for (i64 i = 0; i < n; ++i) out.emplace_back(l.gen, s);
  }
  return out;
}

Word collapse(const Exp& e) {
  Word w;
  for (auto [g, s] : e) w.letters.push_back({g, s});
  return free_reduce(w);
}

Exp reduce_exp(const Exp& e) { return expand(collapse(e)); }

Exp invert_exp(const Exp& e) {
  Exp out;
  for (auto it = e.rbegin(); it != e.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

Exp cyclic_reduce_exp(Exp e) {
  e = reduce_exp(e);
  while (e.size() >= 2 && e.front().first == e.back().first &&
         e.front().second == -e.back().second) {
    e.erase(e.begin());
    e.pop_back();
    e = reduce_exp(e);
  }
  return e;
}

// Canonical key for duplicate detection: lexicographically minimal
// rotation of the word or its inverse.
Exp canonical_cyclic(const Exp& e) {
  Exp best;
  bool have = false;
  for (const Exp& base : {e, invert_exp(e)}) {
    for (size_t s = 0; s < std::max<size_t>(base.size(), 1); ++s) {
      Exp rot;
      for (size_t i = 0; i < base.size(); ++i) rot.push_back(base[(s + i) % base.size()]);
      if (!have || rot < best) {
        best = rot;
        have = true;
      }
    }
  }
  return best;
}

struct Simplifier {
  std::vector<std::string> gens;
  std::vector<Exp> rels;
  std::vector<TietzeStep> transcript;
  i64 budget;
  i64 spent = 0;

  Simplifier(const Presentation& p, i64 b) : budget(b) {
    gens = p.generators;
    for (const Word& r : p.relators) rels.push_back(expand(r));
  }

  bool charge(i64 cost) {
    spent += cost;
    return spent <= budget;
  }

  Presentation snapshot() const {
    Presentation p;
    for (const auto& g : gens) p.generators.push_back(g);
    for (const Exp& r : rels) p.relators.push_back(collapse(r));
    return p;
  }

  void record(const std::string& what) { transcript.push_back({what, snapshot()}); }

  bool normalize() {
    bool changed = false;
    for (Exp& r : rels) {
      Exp red = cyclic_reduce_exp(r);
      charge(static_cast<i64>(r.size() + red.size()));
      if (red != r) {
        r = std::move(red);
        changed = true;
      }
    }
    size_t before = rels.size();
    std::erase_if(rels, [](const Exp& r) { return r.empty(); });
    std::map<Exp, bool> seen;
    std::vector<Exp> kept;
    for (const Exp& r : rels) {
      Exp key = canonical_cyclic(r);
      charge(static_cast<i64>(key.size()));
      if (!seen.count(key)) {
        seen[key] = true;
        kept.push_back(r);
      }
    }
    rels = std::move(kept);
    changed = changed || rels.size() != before;
    if (changed) record("reduce relators");
    return changed;
  }

  // Looks for a relator containing some generator exactly once with
  // exponent +-1; the shortest such relator wins.
  bool eliminate() {
    int best_rel = -1;
    size_t best_pos = 0;
    for (size_t i = 0; i < rels.size(); ++i) {
      if (best_rel >= 0 && rels[i].size() >= rels[best_rel].size()) continue;
      std::map<int, int> count;
      for (auto [g, s] : rels[i]) count[g]++;
      for (size_t pos = 0; pos < rels[i].size(); ++pos)
        if (count[rels[i][pos].first] == 1) {
          best_rel = static_cast<int>(i);
          best_pos = pos;
          break;
        }
    }
    if (best_rel < 0) return false;

    Exp rel = rels[best_rel];
    int g = rel[best_pos].first;
    int sign = rel[best_pos].second;
    Exp u(rel.begin(), rel.begin() + static_cast<long>(best_pos));
    Exp v(rel.begin() + static_cast<long>(best_pos) + 1, rel.end());
    // u g^s v = 1  =>  g^s = u^-1 v^-1
    Exp rhs = invert_exp(u);
    Exp vinv = invert_exp(v);
    rhs.insert(rhs.end(), vinv.begin(), vinv.end());
    Exp replacement = sign > 0 ? rhs : invert_exp(rhs);

    std::string gname = gens[static_cast<size_t>(g)];
    rels.erase(rels.begin() + best_rel);
    for (Exp& r : rels) {
      Exp out;
      for (auto [rg, rs] : r) {
        if (rg == g) {
          const Exp& ins = rs > 0 ? replacement : invert_exp(replacement);
          out.insert(out.end(), ins.begin(), ins.end());
        } else {
          out.push_back({rg, rs});
        }
      }
      charge(static_cast<i64>(out.size()));
      r = reduce_exp(out);
    }
    // renumber generators above g
    gens.erase(gens.begin() + g);
    for (Exp& r : rels)
      for (auto& [rg, rs] : r)
        if (rg > g) --rg;
    record("eliminate generator " + gname);
    return true;
  }

  // Replaces, in some relator, an occurrence of more than half of
  // another (cyclically rotated, possibly inverted) relator by the
  // inverse of its complement.
  bool shorten() {
    size_t best_len = 0;
    int bi = -1, bj = -1;
    size_t b_pos = 0, b_off = 0;
    bool b_inv = false;
    for (size_t j = 0; j < rels.size(); ++j) {
      const size_t nj = rels[j].size();
      if (nj < 2) continue;
      for (int use_inv = 0; use_inv < 2; ++use_inv) {
        Exp dbl = use_inv ? invert_exp(rels[j]) : rels[j];
        dbl.insert(dbl.end(), dbl.begin(), dbl.end());
        for (size_t i = 0; i < rels.size(); ++i) {
          if (i == j) continue;
          const Exp& ri = rels[i];
          size_t max_l = std::min(ri.size(), nj);
          for (size_t L = max_l; L > nj / 2 && L > best_len; --L) {
            for (size_t pos = 0; pos + L <= ri.size(); ++pos) {
              for (size_t off = 0; off < nj; ++off) {
                charge(static_cast<i64>(L) / 4 + 1);
                if (spent > budget) return false;
                bool ok = true;
                for (size_t k = 0; k < L && ok; ++k) ok = ri[pos + k] == dbl[off + k];
                if (ok) {
                  best_len = L;
                  bi = static_cast<int>(i);
                  bj = static_cast<int>(j);
                  b_pos = pos;
                  b_off = off;
                  b_inv = use_inv;
                  break;
                }
              }
              if (best_len == L) break;
            }
            if (best_len == L) break;
          }
        }
      }
    }
    if (bi < 0) return false;
    Exp dbl = b_inv ? invert_exp(rels[static_cast<size_t>(bj)]) : rels[static_cast<size_t>(bj)];
    size_t nj = dbl.size();
    dbl.insert(dbl.end(), dbl.begin(), dbl.end());
    // rotation = s t with |s| = best_len; s = t^-1 in the group
    Exp tpart(dbl.begin() + static_cast<long>(b_off + best_len),
              dbl.begin() + static_cast<long>(b_off + nj));
    Exp rep = invert_exp(tpart);
    Exp& ri = rels[static_cast<size_t>(bi)];
    Exp out(ri.begin(), ri.begin() + static_cast<long>(b_pos));
    out.insert(out.end(), rep.begin(), rep.end());
    out.insert(out.end(), ri.begin() + static_cast<long>(b_pos + best_len), ri.end());
    charge(static_cast<i64>(out.size()));
    ri = reduce_exp(out);
    record("substitute relator overlap");
    return true;
  }

  void run() {
    while (spent <= budget) {
      bool n = normalize();
      if (spent > budget) break;
      if (eliminate()) continue;
      if (spent > budget) break;
      if (shorten()) continue;
      if (!n) break;
    }
  }
};

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, i64 budget) {
  if (budget <= 0) throw BadParameter("tietze_simplify: budget must be positive");
  Simplifier s(p, budget);
  s.run();
  TietzeResult r;
  r.result = s.snapshot();
  r.transcript = std::move(s.transcript);
  r.trivialized = r.result.generators.empty() && r.result.relators.empty();
  r.budget_spent = s.spent;
  return r;
}

}  // namespace fourcalc
