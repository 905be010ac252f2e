#include "fourcalc/manifold.hpp"

#include <algorithm>

#include "fourcalc/smith.hpp"

namespace fourcalc {

std::string to_string(SurfaceTag t) {
  switch (t) {
    case SurfaceTag::Symplectic:
      return "symplectic";
    case SurfaceTag::Lagrangian:
      return "lagrangian";
    default:
      return "complex";
  }
}

const TrackedSurface* ManifoldState::find(const std::string& name) const {
  for (const TrackedSurface& s : surfaces)
    if (s.name == name) return &s;
  return nullptr;
}

TrackedSurface& ManifoldState::require(const std::string& name) {
  for (TrackedSurface& s : surfaces)
    if (s.name == name) return s;
  throw UnknownSurface("no tracked surface named " + name);
}

const TrackedSurface& ManifoldState::require(const std::string& name) const {
  for (const TrackedSurface& s : surfaces)
    if (s.name == name) return s;
  throw UnknownSurface("no tracked surface named " + name);
}

void ManifoldState::validate() const {
  for (const TrackedSurface& s : surfaces) {
    if (s.intersections.count(s.name))
      throw PreconditionViolated("surface " + s.name + " lists itself");
    for (const auto& [other, n] : s.intersections) {
      if (n <= 0) throw PreconditionViolated("non-positive intersection count on " + s.name);
      const TrackedSurface& o = require(other);
      auto it = o.intersections.find(s.name);
      if (it == o.intersections.end() || it->second != n)
        throw PreconditionViolated("asymmetric intersection record " + s.name + "/" + other);
    }
  }
  InvariantVector check = derive(invariants.e, invariants.sigma, invariants.b1, invariants.spin);
  if (check.c1_sq != invariants.c1_sq || check.chi_h != invariants.chi_h ||
      check.b2 != invariants.b2)
    throw PreconditionViolated("stale derived invariants on manifold state");
}

namespace {

void drop_surface_references(ManifoldState& st, const std::string& name) {
  for (TrackedSurface& s : st.surfaces) s.intersections.erase(name);
}

std::string fresh_exceptional_name(const ManifoldState& st) {
  for (int k = 1;; ++k) {
    std::string name = "E" + std::to_string(k);
    if (!st.find(name)) return name;
  }
}

void rename_everywhere(ManifoldState& st, const std::string& from, const std::string& to) {
  if (from == to) return;
  if (st.find(to)) throw BadParameter("rename target already tracked: " + to);
  for (TrackedSurface& s : st.surfaces) {
    if (s.name == from) s.name = to;
    auto it = s.intersections.find(from);
    if (it != s.intersections.end()) {
      i64 n = it->second;
      s.intersections.erase(it);
      s.intersections[to] = n;
    }
  }
  for (Pi1Fact& f : st.facts)
    if (f.surface == from) f.surface = to;
}

void rederive(ManifoldState& st, i64 e, i64 sigma, i64 b1, Spin spin) {
  InvariantVector old = st.invariants;
  st.invariants = derive(e, sigma, b1, spin);
  st.invariants.simply_connected = old.simply_connected;
  st.invariants.symplectic = old.symplectic;
  st.invariants.minimal = old.minimal;
}

std::vector<Pi1Fact> facts_for_surface(const ManifoldState& st, const std::string& surface) {
  std::vector<Pi1Fact> out;
  for (const Pi1Fact& f : st.facts)
    if (f.surface == surface) out.push_back(f);
  return out;
}

}  // namespace

ManifoldState blow_up(const ManifoldState& s, std::optional<std::string> on_surface,
                      std::optional<std::string> rename) {
  ManifoldState out = s;
  if (on_surface) out.require(*on_surface);
  rederive(out, checked_add(s.invariants.e, 1), checked_sub(s.invariants.sigma, 1),
           s.invariants.b1, Spin::NonSpin);
  out.invariants.minimal = false;  // the exceptional sphere is a -1 sphere

  TrackedSurface ex;
  ex.name = fresh_exceptional_name(out);
  ex.genus = 0;
  ex.self_intersection = -1;
  ex.tags = {SurfaceTag::Symplectic};
  std::string target;
  if (on_surface) {
    TrackedSurface& t = out.require(*on_surface);
    t.self_intersection = checked_sub(t.self_intersection, 1);
    t.intersections[ex.name] = 1;
    ex.intersections[t.name] = 1;
    target = t.name;
  }
  out.surfaces.push_back(ex);
  if (on_surface && rename) {
    rename_everywhere(out, *on_surface, *rename);
    target = *rename;
  }
  std::string label = "blow_up";
  if (on_surface) {
    label += "(on " + *on_surface + (rename ? " -> " + *rename : std::string()) + ")";
  }
  out.provenance.push_back({label, ""});
  if (on_surface) {
    // a sphere meeting the surface transversally once kills its
    // meridian in the complement
    out.facts.push_back({FactKind::MeridianDies,
                         "sphere section meets the surface transversally in exactly one point",
                         target});
    out.provenance.push_back({"derive meridian-dies(" + target + ")",
                              "the exceptional sphere meets it transversally in one point"});
  }
  return out;
}

ManifoldState blow_up_at_intersection(const ManifoldState& s, const std::string& s1,
                                      const std::string& s2) {
  const TrackedSurface& a = s.require(s1);
  s.require(s2);
  auto it = a.intersections.find(s2);
  if (it == a.intersections.end() || it->second < 1)
    throw PreconditionViolated("surfaces " + s1 + " and " + s2 + " have no recorded intersection");

  ManifoldState out = s;
  rederive(out, checked_add(s.invariants.e, 1), checked_sub(s.invariants.sigma, 1),
           s.invariants.b1, Spin::NonSpin);
  out.invariants.minimal = false;
  TrackedSurface ex;
  ex.name = fresh_exceptional_name(out);
  ex.genus = 0;
  ex.self_intersection = -1;
  ex.tags = {SurfaceTag::Symplectic};
  for (const std::string& n : {s1, s2}) {
    TrackedSurface& t = out.require(n);
    t.self_intersection = checked_sub(t.self_intersection, 1);
    t.intersections[ex.name] = 1;
    ex.intersections[n] = 1;
  }
  TrackedSurface& ta = out.require(s1);
  TrackedSurface& tb = out.require(s2);
  if (--ta.intersections[s2] == 0) ta.intersections.erase(s2);
  if (--tb.intersections[s1] == 0) tb.intersections.erase(s1);
  out.surfaces.push_back(ex);
  out.provenance.push_back({"blow_up(at " + s1 + " ^ " + s2 + ")", ""});
  return out;
}

ManifoldState resolve(const ManifoldState& s, const std::vector<std::string>& names,
                      std::optional<std::string> new_name) {
  if (names.empty()) throw BadParameter("resolve: empty configuration");
  for (const std::string& n : names) s.require(n);

  auto in_config = [&](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };

  // connectivity of the configuration under pairwise intersections
  std::set<std::string> reached{names.front()};
  for (bool grew = true; grew;) {
    grew = false;
    for (const std::string& n : names) {
      if (reached.count(n)) continue;
      const TrackedSurface& t = s.require(n);
      for (const auto& [other, cnt] : t.intersections)
        if (cnt > 0 && reached.count(other)) {
          reached.insert(n);
          grew = true;
          break;
        }
    }
  }
  if (reached.size() != names.size())
    throw DisconnectedConfiguration("resolve: configuration is not connected");

  i64 genus_sum = 0, square_sum = 0, pair_count = 0;
  TrackedSurface merged;
  bool first = true;
  for (const std::string& n : names) {
    const TrackedSurface& t = s.require(n);
    genus_sum = checked_add(genus_sum, t.genus);
    square_sum = checked_add(square_sum, t.self_intersection);
    for (const auto& [other, cnt] : t.intersections) {
      if (in_config(other))
        pair_count = checked_add(pair_count, cnt);  // counted from both ends
      else
        merged.intersections[other] = checked_add(merged.intersections[other], cnt);
    }
    if (first) {
      merged.tags = t.tags;
      first = false;
    } else {
      std::set<SurfaceTag> common;
      for (SurfaceTag tag : merged.tags)
        if (t.tags.count(tag)) common.insert(tag);
      merged.tags = common;
    }
  }
  pair_count /= 2;
  merged.genus = checked_add(checked_sub(checked_add(genus_sum, pair_count),
                                         static_cast<i64>(names.size())),
                             1);
  merged.self_intersection = checked_add(square_sum, checked_mul(2, pair_count));

  std::string joined;
  for (const std::string& n : names) joined += (joined.empty() ? "" : "+") + n;
  merged.name = new_name.value_or(joined);

  ManifoldState out = s;
  for (const std::string& n : names) {
    drop_surface_references(out, n);
    std::erase_if(out.surfaces, [&](const TrackedSurface& t) { return t.name == n; });
    std::erase_if(out.facts, [&](const Pi1Fact& f) { return f.surface == n; });
  }
  if (out.find(merged.name)) throw BadParameter("resolve: name already tracked: " + merged.name);
  for (const auto& [other, cnt] : merged.intersections)
    out.require(other).intersections[merged.name] = cnt;
  out.surfaces.push_back(merged);
  out.provenance.push_back({"resolve(" + joined + " -> " + merged.name + ")", ""});
  return out;
}

ManifoldState symplectic_sum(const ManifoldState& a, const std::string& surf_a,
                             const ManifoldState& b, const std::string& surf_b) {
  const TrackedSurface& fa = a.require(surf_a);
  const TrackedSurface& fb = b.require(surf_b);
  if (fa.genus != fb.genus)
    throw GenusMismatch("symplectic_sum: genus " + std::to_string(fa.genus) + " vs " +
                        std::to_string(fb.genus));
  if (checked_add(fa.self_intersection, fb.self_intersection) != 0)
    throw NormalBundleMismatch("symplectic_sum: squares " +
                               std::to_string(fa.self_intersection) + " + " +
                               std::to_string(fb.self_intersection) + " != 0");
  i64 g = fa.genus;

  ManifoldState out;
  i64 e = checked_add(checked_add(a.invariants.e, b.invariants.e),
                      checked_mul(4, checked_sub(g, 1)));
  i64 sigma = checked_add(a.invariants.sigma, b.invariants.sigma);

  // complement data feeding the Van Kampen deduction
  Pi1Datum da = DeclaredPi1{facts_for_surface(a, surf_a), false};
  Pi1Datum db = DeclaredPi1{facts_for_surface(b, surf_b), false};
  Pi1Datum glued = van_kampen_sum(da, db, {}, {}, true);

  i64 b1 = 0;
  bool simply_connected = false;
  if (const auto* expl = std::get_if<ExplicitPi1>(&glued)) {
    out.pi1.form = Pi1Form::Explicit;
    out.pi1.presentation = expl->pres;
    b1 = abelianize(expl->pres).free_rank;
    simply_connected = expl->pres.is_trivial_presentation();
  } else {
    out.pi1.form = Pi1Form::Undetermined;
  }

  // carry the surviving surfaces; those that met the gluing locus keep
  // their data minus the removed entry. b-side names colliding with
  // a-side names get primes, with intra-side references remapped.
  auto strip_glued = [](const TrackedSurface& t, const std::string& glued_name) {
    TrackedSurface c = t;
    auto it = c.intersections.find(glued_name);
    if (it != c.intersections.end()) {
      c.intersections.erase(it);
      c.notes.push_back("boundary-touching");
    }
    c.complement_trivial_citation.reset();  // complements change across the sum
    return c;
  };
  for (const TrackedSurface& t : a.surfaces)
    if (t.name != surf_a) out.surfaces.push_back(strip_glued(t, surf_a));
  {
    std::map<std::string, std::string> rename;
    std::vector<TrackedSurface> staged;
    for (const TrackedSurface& t : b.surfaces) {
      if (t.name == surf_b) continue;
      TrackedSurface c = strip_glued(t, surf_b);
      std::string name = c.name;
      while (out.find(name) ||
             std::any_of(staged.begin(), staged.end(),
                         [&](const TrackedSurface& s) { return s.name == name; }))
        name += "'";
      rename[c.name] = name;
      c.name = name;
      staged.push_back(std::move(c));
    }
    for (TrackedSurface& c : staged) {
      std::map<std::string, i64> fixed;
      for (const auto& [other, cnt] : c.intersections) {
        auto r = rename.find(other);
        fixed[r != rename.end() ? r->second : other] = cnt;
      }
      c.intersections = std::move(fixed);
      out.surfaces.push_back(std::move(c));
    }
  }

  // nonspin-ness needs an odd-square witness disjoint from the gluing
  Spin spin = Spin::Unknown;
  std::string witness;
  auto scan_witness = [&](const ManifoldState& side, const std::string& glued_name) {
    for (const TrackedSurface& t : side.surfaces) {
      if (t.name == glued_name) continue;
      if (t.self_intersection % 2 == 0) continue;
      auto it = t.intersections.find(glued_name);
      if (it == t.intersections.end() || it->second == 0) {
        spin = Spin::NonSpin;
        if (witness.empty()) witness = t.name;
      }
    }
  };
  scan_witness(a, surf_a);
  scan_witness(b, surf_b);

  out.invariants = derive(e, sigma, b1, spin);
  out.invariants.simply_connected = simply_connected;
  // the induced symplectic structure needs both pieces symplectic and
  // the gluing performed along symplectic surfaces
  out.invariants.symplectic = a.invariants.symplectic && b.invariants.symplectic &&
                              fa.tags.count(SurfaceTag::Symplectic) > 0 &&
                              fb.tags.count(SurfaceTag::Symplectic) > 0;
  out.invariants.minimal = false;  // minimality is declared per catalog, never inferred

  out.provenance = a.provenance;
  out.provenance.insert(out.provenance.end(), b.provenance.begin(), b.provenance.end());
  out.provenance.push_back({"symplectic_sum(" + surf_a + " = " + surf_b + ", genus " +
                                std::to_string(g) + ")",
                            ""});
  if (spin == Spin::NonSpin)
    out.provenance.push_back({"nonspin: odd-square surface " + witness +
                                  " disjoint from the gluing locus",
                              ""});
  if (out.pi1.form == Pi1Form::Explicit && simply_connected)
    out.provenance.push_back(
        {"pi1 trivial by Van Kampen deduction (surjective surface side + killed side)", ""});
  else if (out.pi1.form == Pi1Form::Undetermined)
    out.provenance.push_back({"pi1 undetermined after sum", ""});
  return out;
}

ManifoldState luttinger(const ManifoldState& s, const LuttingerSpec& spec) {
  if (spec.coeff_den == 0) throw BadParameter("luttinger: zero surgery denominator");
  const TrackedSurface& t = s.require(spec.torus_name);
  if (t.genus != 1 || t.self_intersection != 0)
    throw NotATorus("luttinger: " + spec.torus_name + " is not a square-zero torus");
  ManifoldState out = s;
  if (out.pi1.form == Pi1Form::Explicit && (!spec.mu.empty() || !spec.gamma_push.empty()))
    out.pi1.presentation =
        luttinger_quotient(*out.pi1.presentation, spec.mu, spec.gamma_push, spec.coeff_num);
  out.provenance.push_back({"luttinger(" + spec.torus_name + ", " + spec.curve_label + ", " +
                                std::to_string(spec.coeff_num) + "/" +
                                std::to_string(spec.coeff_den) + ")",
                            ""});
  return out;
}

ManifoldState knot_surgery(const ManifoldState& s, const std::string& torus, i64 family_index) {
  const TrackedSurface& t = s.require(torus);
  if (t.genus != 1 || t.self_intersection != 0)
    throw NotATorus("knot_surgery: " + torus + " is not a square-zero torus");
  if (!t.complement_trivial_citation)
    throw MissingComplementFact("knot_surgery: no declared fact that pi1 of the complement of " +
                                torus + " is trivial");
  ManifoldState out = s;
  if (family_index != 0) out.invariants.symplectic = false;
  out.provenance.push_back({"knot_surgery(" + torus + ", family " +
                                std::to_string(family_index) + ")",
                            *t.complement_trivial_citation});
  return out;
}

ManifoldState with_fact(const ManifoldState& s, FactKind kind, const std::string& surface,
                        const std::string& citation) {
  if (citation.empty()) throw BadParameter("declared facts need a citation");
  if (!surface.empty()) s.require(surface);
  ManifoldState out = s;
  out.facts.push_back({kind, citation, surface});
  out.provenance.push_back({"declare " + to_string(kind) + "(" + surface + ")", citation});
  return out;
}

ManifoldState with_simply_connected(const ManifoldState& s, const std::string& citation) {
  if (citation.empty()) throw BadParameter("declared facts need a citation");
  ManifoldState out = s;
  out.pi1.form = Pi1Form::Explicit;
  out.pi1.presentation = Presentation{};
  rederive(out, s.invariants.e, s.invariants.sigma, 0, s.invariants.spin);
  out.invariants.simply_connected = true;
  out.provenance.push_back({"declare simply connected", citation});
  return out;
}

ManifoldState with_minimal(const ManifoldState& s, const std::string& citation) {
  if (citation.empty()) throw BadParameter("declared facts need a citation");
  ManifoldState out = s;
  out.invariants.minimal = true;
  out.provenance.push_back({"declare minimal", citation});
  return out;
}

ManifoldState with_internal_sum_surface(const ManifoldState& s, TrackedSurface surface,
                                        const std::string& citation) {
  if (citation.empty()) throw BadParameter("declared facts need a citation");
  if (s.find(surface.name)) throw BadParameter("surface already tracked: " + surface.name);
  ManifoldState out = s;
  surface.notes.push_back("internal sum");
  for (const auto& [other, cnt] : surface.intersections)
    out.require(other).intersections[surface.name] = cnt;
  out.surfaces.push_back(std::move(surface));
  out.provenance.push_back({"internal_sum surface " + out.surfaces.back().name, citation});
  return out;
}

ManifoldState with_complement_trivial(const ManifoldState& s, const std::string& torus,
                                      const std::string& citation) {
  if (citation.empty()) throw BadParameter("declared facts need a citation");
  ManifoldState out = s;
  out.require(torus).complement_trivial_citation = citation;
  out.provenance.push_back({"declare pi1(complement of " + torus + ") = 1", citation});
  return out;
}

std::string pi1_description(const ManifoldState& s) {
  if (s.pi1.form == Pi1Form::Explicit) {
    if (s.pi1.presentation->is_trivial_presentation()) return "trivial";
    AbelianGroupDescription h1 = abelianize(*s.pi1.presentation);
    if (h1.is_trivial()) return "Z^0";  // trivial H1, group not certified trivial
    return h1.to_string();
  }
  return "undetermined";
}

}  // namespace fourcalc
