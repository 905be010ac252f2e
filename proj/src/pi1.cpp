#include "fourcalc/pi1.hpp"

#include <algorithm>

#include "fourcalc/errors.hpp"

namespace fourcalc {

std::string to_string(FactKind k) {
  switch (k) {
    case FactKind::SurjectiveFromSurface:
      return "surjective-from-surface";
    case FactKind::GeneratorsDieInComplement:
      return "generators-die-in-complement";
    default:
      return "meridian-dies";
  }
}

bool has_fact(const DeclaredPi1& d, FactKind k) {
  return std::any_of(d.facts.begin(), d.facts.end(),
                     [k](const Pi1Fact& f) { return f.kind == k; });
}

namespace {

// A word is literally killed by a presentation if it reduces to the
// identity or matches a relator up to cyclic rotation and inversion.
bool literally_killed(const Presentation& p, const Word& w) {
  Word cw = cyclic_reduce(w);
  if (cw.empty()) return true;
  auto expand = [](const Word& x) {
    std::vector<std::pair<int, int>> out;
    for (const Letter& l : x.letters) {
      int s = l.exp > 0 ? 1 : -1;
      for (i64 i = 0; i < (l.exp > 0 ? l.exp : -l.exp); ++i) out.emplace_back(l.gen, s);
    }
    return out;
  };
  auto target = expand(cw);
  auto matches_rotation = [&](std::vector<std::pair<int, int>> rel) {
    if (rel.size() != target.size()) return false;
    for (size_t s = 0; s < rel.size(); ++s) {
      bool ok = true;
      for (size_t i = 0; i < rel.size() && ok; ++i)
        ok = rel[(s + i) % rel.size()] == target[i];
      if (ok) return true;
    }
    return false;
  };
  for (const Word& r : p.relators) {
    Word cr = cyclic_reduce(r);
    if (matches_rotation(expand(cr))) return true;
    if (matches_rotation(expand(inverse(cr)))) return true;
  }
  return false;
}

bool kills_identified_side(const Pi1Datum& side, const std::vector<Word>& ids,
                           bool kill_meridians) {
  if (const auto* d = std::get_if<DeclaredPi1>(&side))
    return !d->undetermined && has_fact(*d, FactKind::GeneratorsDieInComplement) &&
           has_fact(*d, FactKind::MeridianDies);
  const auto& e = std::get<ExplicitPi1>(side);
  for (const Word& w : ids)
    if (!literally_killed(e.pres, w)) return false;
  // with kill_meridians the meridian relator is imposed by the sum
  // itself; otherwise it must already die
  if (!kill_meridians) {
    if (!e.meridian) return false;
    if (!literally_killed(e.pres, *e.meridian)) return false;
  }
  return true;
}

bool is_surjective_side(const Pi1Datum& side) {
  const auto* d = std::get_if<DeclaredPi1>(&side);
  return d && !d->undetermined && has_fact(*d, FactKind::SurjectiveFromSurface);
}

Pi1Datum merge_explicit(const ExplicitPi1& a, const ExplicitPi1& b, const std::vector<Word>& ids_a,
                        const std::vector<Word>& ids_b, bool kill_meridians) {
  Presentation merged;
  for (const auto& g : a.pres.generators) merged.add_generator(g);
  std::vector<int> bmap(b.pres.generators.size());
  for (size_t i = 0; i < b.pres.generators.size(); ++i) {
    std::string name = b.pres.generators[i];
    while (merged.gen_index(name) >= 0) name += "'";
    bmap[i] = merged.add_generator(name);
  }
  auto remap = [&](const Word& w) {
    Word out = w;
    for (Letter& l : out.letters) l.gen = bmap[static_cast<size_t>(l.gen)];
    return out;
  };
  for (const Word& r : a.pres.relators) merged.add_relator(r);
  for (const Word& r : b.pres.relators) merged.add_relator(remap(r));
  for (size_t i = 0; i < ids_a.size(); ++i)
    merged.add_relator(concat(ids_a[i], inverse(remap(ids_b[i]))));
  if (kill_meridians) {
    if (a.meridian) merged.add_relator(*a.meridian);
    if (b.meridian) merged.add_relator(remap(*b.meridian));
  }
  return ExplicitPi1{std::move(merged), std::nullopt};
}

}  // namespace

Pi1Datum van_kampen_sum(const Pi1Datum& a, const Pi1Datum& b, const std::vector<Word>& ids_a,
                        const std::vector<Word>& ids_b, bool kill_meridians) {
  if (ids_a.size() != ids_b.size())
    throw InconsistentIdentification("identification lists have different lengths: " +
                                     std::to_string(ids_a.size()) + " vs " +
                                     std::to_string(ids_b.size()));
  if (std::holds_alternative<ExplicitPi1>(a) && std::holds_alternative<ExplicitPi1>(b))
    return merge_explicit(std::get<ExplicitPi1>(a), std::get<ExplicitPi1>(b), ids_a, ids_b,
                          kill_meridians);

  if (kill_meridians) {
    bool a_surj_b_kills = is_surjective_side(a) && kills_identified_side(b, ids_b, true);
    bool b_surj_a_kills = is_surjective_side(b) && kills_identified_side(a, ids_a, true);
    if (a_surj_b_kills || b_surj_a_kills) return ExplicitPi1{Presentation{}, std::nullopt};
  }
  DeclaredPi1 out;
  out.undetermined = true;
  return out;
}

}  // namespace fourcalc
