// Manifold states and the construction operations acting on them:
// blow-up, symplectic resolution, symplectic connected sum, Luttinger
// surgery bookkeeping, and knot surgery family labels.
#pragma once

#include <map>
#include <optional>
#include <set>

#include "fourcalc/invariants.hpp"
#include "fourcalc/pi1.hpp"

namespace fourcalc {

enum class SurfaceTag { Symplectic, Lagrangian, Complex };

std::string to_string(SurfaceTag t);

struct TrackedSurface {
  std::string name;
  i64 genus = 0;
  i64 self_intersection = 0;
  std::set<SurfaceTag> tags;
  std::map<std::string, i64> intersections;  // transverse counts, entries >= 1
  std::vector<std::string> notes;            // e.g. "boundary-touching", internal-sum citations
  std::optional<std::string> complement_trivial_citation;  // pi1(M - this surface) = 1
};

struct ProvenanceEntry {
  std::string op;
  std::string citation;  // may be empty for purely formal steps
};

// How pi1 of the manifold itself is known. Declared facts about surface
// complements live in ManifoldState::facts regardless of this form.
enum class Pi1Form { Explicit, Declared, Undetermined };

struct StatePi1 {
  Pi1Form form = Pi1Form::Declared;
  std::optional<Presentation> presentation;  // set iff form == Explicit
};

struct ManifoldState {
  InvariantVector invariants;
  std::vector<TrackedSurface> surfaces;
  StatePi1 pi1;
  std::vector<Pi1Fact> facts;  // complement facts, surface-tagged
  std::vector<ProvenanceEntry> provenance;

  const TrackedSurface* find(const std::string& name) const;
  TrackedSurface& require(const std::string& name);  // throws UnknownSurface
  const TrackedSurface& require(const std::string& name) const;

  // Checks intersection symmetry, no self-listing, and the c1^2 and
  // chi_h identities on the invariant vector.
  void validate() const;
};

// Parameters of a torus surgery: the Lagrangian torus, the curve on it,
// the surgery coefficient num/den, and the words feeding the relator
// mu * gamma'^m when pi1 is explicit.
struct LuttingerSpec {
  std::string torus_name;
  std::string curve_label;
  i64 coeff_num = 1;  // surgery coefficient coeff_num / coeff_den
  i64 coeff_den = 1;
  int direction_sign = +1;
  Word mu;          // meridian word, may be empty
  Word gamma_push;  // Lagrangian push-off word, may be empty
};

// e+1, sigma-1; spin becomes NonSpin; a fresh exceptional sphere is
// tracked. With on_surface, that surface loses 1 from its square and
// meets the new sphere once (rename takes effect afterwards).
ManifoldState blow_up(const ManifoldState& s, std::optional<std::string> on_surface = {},
                      std::optional<std::string> rename = {});

// Blow-up at a transverse intersection point of two tracked surfaces:
// both squares drop by 1, so does their pairwise count, and the new
// sphere meets each once.
ManifoldState blow_up_at_intersection(const ManifoldState& s, const std::string& s1,
                                      const std::string& s2);

// Replaces a connected configuration of surfaces by its symplectic
// resolution: genus = sum of genera + total pairwise count - components
// + 1, square = sum of squares + 2 * total pairwise count. Invariants
// of the manifold are unchanged.
ManifoldState resolve(const ManifoldState& s, const std::vector<std::string>& names,
                      std::optional<std::string> new_name = {});

// Fiber sum along same-genus surfaces with opposite squares. The glued
// surfaces are removed, survivors touching the gluing locus are
// annotated, pi1 comes from the Van Kampen deduction on the declared
// complement facts, and nonspin-ness propagates from an odd-square
// witness surface disjoint from the gluing locus.
ManifoldState symplectic_sum(const ManifoldState& a, const std::string& surf_a,
                             const ManifoldState& b, const std::string& surf_b);

// Invariants unchanged; applies luttinger_quotient when pi1 is explicit
// and the surgery data carries words.
ManifoldState luttinger(const ManifoldState& s, const LuttingerSpec& spec);

// Invariants and homeomorphism type unchanged; provenance records a
// distinct smooth-structure family label. The symplectic flag survives
// only for family index 0 (the fibered/unknot convention).
ManifoldState knot_surgery(const ManifoldState& s, const std::string& torus, i64 family_index);

// catalog-style declaration steps, each recorded with its citation
ManifoldState with_fact(const ManifoldState& s, FactKind kind, const std::string& surface,
                        const std::string& citation);
ManifoldState with_simply_connected(const ManifoldState& s, const std::string& citation);
ManifoldState with_minimal(const ManifoldState& s, const std::string& citation);
ManifoldState with_internal_sum_surface(const ManifoldState& s, TrackedSurface surface,
                                        const std::string& citation);
ManifoldState with_complement_trivial(const ManifoldState& s, const std::string& torus,
                                      const std::string& citation);

// H1-level description of the state's pi1 for reports: "trivial",
// "Z^r(+torsion)" or "undetermined".
std::string pi1_description(const ManifoldState& s);

}  // namespace fourcalc
