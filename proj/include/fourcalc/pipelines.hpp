// The named construction pipelines and the audit: every numeric claim
// the source constructions state, re-derived by the engine and compared
// against the stated value.
#pragma once

#include "fourcalc/catalog.hpp"

namespace fourcalc {

enum class AuditStatus { Match, Mismatch };

struct AuditRow {
  std::string claim_id;
  std::string citation;  // section/lemma plus the stated fragment
  i64 stated = 0;
  i64 computed = 0;
  AuditStatus status = AuditStatus::Match;
};

struct PipelineResult {
  ManifoldState state;
  std::vector<AuditRow> rows;
};

// Names: Z3, Z2, M14, M25, M35, Sn (Sn takes the cover parameter,
// default 5). Each pipeline executes the construction step by step and
// emits one row per stated value.
PipelineResult run_named_pipeline(const std::string& name, std::optional<i64> param = {});

// All pipelines plus the cover, tower, fibration, and threshold claims,
// in a fixed deterministic order. Mismatches are findings, not errors.
std::vector<AuditRow> audit();

}  // namespace fourcalc
