// Fundamental-group data attached to manifolds: either an explicit
// presentation or a bag of declared facts with citations, plus the
// Seifert-Van Kampen amalgamation over a glued surface.
#pragma once

#include <optional>
#include <variant>

#include "fourcalc/presentation.hpp"

namespace fourcalc {

enum class FactKind { SurjectiveFromSurface, GeneratorsDieInComplement, MeridianDies };

std::string to_string(FactKind k);

struct Pi1Fact {
  FactKind kind;
  std::string citation;  // required, nonempty
  std::string surface;   // which surface the fact is about; may be empty
  friend bool operator==(const Pi1Fact&, const Pi1Fact&) = default;
};

struct ExplicitPi1 {
  Presentation pres;
  std::optional<Word> meridian;  // meridian of the removed surface, when known
  friend bool operator==(const ExplicitPi1&, const ExplicitPi1&) = default;
};

struct DeclaredPi1 {
  std::vector<Pi1Fact> facts;
  bool undetermined = false;  // set when a deduction could not conclude
  friend bool operator==(const DeclaredPi1&, const DeclaredPi1&) = default;
};

using Pi1Datum = std::variant<ExplicitPi1, DeclaredPi1>;

bool has_fact(const DeclaredPi1& d, FactKind k);

// Amalgamation of two complement groups over a surface group, with the
// surface generators identified pairwise and, when kill_meridians is
// set, both meridians killed.
//
// Both sides explicit: returns the merged presentation (B generators
// renamed on collision) with identification relators wa * wb^-1 and the
// meridian relators.
//
// A side with declared facts: the closed deduction rule applies. If one
// side declares SurjectiveFromSurface and the other side kills every
// identified surface generator and its meridian (by declared facts, or
// for an explicit side by literal relators), and kill_meridians is set,
// the result is the explicit trivial presentation. Anything else is a
// declared datum marked undetermined.
Pi1Datum van_kampen_sum(const Pi1Datum& a, const Pi1Datum& b, const std::vector<Word>& ids_a,
                        const std::vector<Word>& ids_b, bool kill_meridians);

}  // namespace fourcalc
