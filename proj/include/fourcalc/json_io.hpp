// JSON views of manifold states and audit rows, with fixed field order.
#pragma once

#include <nlohmann/json_fwd.hpp>

#include "fourcalc/manifold.hpp"
#include "fourcalc/pipelines.hpp"

namespace fourcalc {

nlohmann::ordered_json state_to_json(const ManifoldState& s);
nlohmann::ordered_json audit_to_json(const std::vector<AuditRow>& rows);

}  // namespace fourcalc
