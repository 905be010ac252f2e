// Best-effort presentation simplification by a deterministic sequence
// of Tietze moves, with a transcript for invariance checking.
#pragma once

#include "fourcalc/presentation.hpp"

namespace fourcalc {

struct TietzeStep {
  std::string description;
  Presentation after;
};

struct TietzeResult {
  Presentation result;
  std::vector<TietzeStep> transcript;
  bool trivialized = false;  // set only when the result has zero generators
  i64 budget_spent = 0;
};

// Move ordering is fixed (reduce relators, eliminate via the shortest
// isolating relator, shorten by the longest common subword), so
// transcripts are reproducible. Terminates within the budget; never
// claims triviality unless the presentation literally reaches zero
// generators.
TietzeResult tietze_simplify(const Presentation& p, i64 budget);

}  // namespace fourcalc
