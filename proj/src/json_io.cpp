#include "fourcalc/json_io.hpp"

#include <nlohmann/json.hpp>

namespace fourcalc {

nlohmann::ordered_json state_to_json(const ManifoldState& s) {
  nlohmann::ordered_json j;
  j["e"] = s.invariants.e;
  j["sigma"] = s.invariants.sigma;
  j["c1sq"] = s.invariants.c1_sq;
  if (s.invariants.chi_h)
    j["chi_h"] = *s.invariants.chi_h;
  else
    j["chi_h"] = nullptr;
  if (s.invariants.b2_plus)
    j["b2plus"] = *s.invariants.b2_plus;
  else
    j["b2plus"] = nullptr;
  if (s.invariants.b2_minus)
    j["b2minus"] = *s.invariants.b2_minus;
  else
    j["b2minus"] = nullptr;
  j["spin"] = to_string(s.invariants.spin);
  j["pi1"] = pi1_description(s);
  nlohmann::ordered_json surfaces = nlohmann::ordered_json::array();
  for (const TrackedSurface& t : s.surfaces) {
    nlohmann::ordered_json js;
    js["name"] = t.name;
    js["genus"] = t.genus;
    js["square"] = t.self_intersection;
    nlohmann::ordered_json tags = nlohmann::ordered_json::array();
    for (SurfaceTag tag : t.tags) tags.push_back(to_string(tag));
    js["tags"] = tags;
    surfaces.push_back(std::move(js));
  }
  j["surfaces"] = std::move(surfaces);
  nlohmann::ordered_json prov = nlohmann::ordered_json::array();
  for (const ProvenanceEntry& p : s.provenance)
    prov.push_back(p.citation.empty() ? p.op : p.op + " [" + p.citation + "]");
  j["provenance"] = std::move(prov);
  return j;
}

nlohmann::ordered_json audit_to_json(const std::vector<AuditRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const AuditRow& r : rows) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["citation"] = r.citation;
    j["stated"] = r.stated;
    j["computed"] = r.computed;
    j["status"] = r.status == AuditStatus::Match ? "MATCH" : "MISMATCH";
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace fourcalc
