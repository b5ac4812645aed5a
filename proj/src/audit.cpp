#include "braidrep/audit.hpp"

namespace braidrep {

nlohmann::json AuditReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json row{{"tag", to_string(c.tag)}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
    row["mismatch"] = c.pass ? nlohmann::json(nullptr) : nlohmann::json(c.mismatch);
    rows.push_back(std::move(row));
  }
  return {{"check", "relators"},
          {"representation", representation},
          {"n", n},
          {"pass", pass()},
          {"relators", rows}};
}

CheckReport CheckReport::all_of(std::string check, std::vector<CheckReport> parts) {
  CheckReport r{std::move(check), true, nullptr, std::move(parts), nullptr};
  for (const auto& p : r.parts) {
    if (!p.pass) {
      r.pass = false;
      if (r.counterexample.is_null()) r.counterexample = {{"failed", p.check}, {"witness", p.counterexample}};
    }
  }
  return r;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j{{"check", check}, {"pass", pass}, {"counterexample", counterexample}};
  if (!parts.empty()) {
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : parts) ps.push_back(p.to_json());
    j["parts"] = ps;
  }
  if (!details.is_null()) j["details"] = details;
  return j;
}

}  // namespace braidrep
