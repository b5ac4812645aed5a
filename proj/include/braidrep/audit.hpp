#pragma once

// Relator audits shared by every representation: evaluate both sides of each
// defining relation and compare the images.

#include <string>
#include <vector>

#include "braidrep/braid.hpp"
#include "json.hpp"

namespace braidrep {

struct RelatorCheck {
  RelatorTag tag;
  std::string lhs;
  std::string rhs;
  bool pass;
  std::string mismatch;  // empty on pass
};

struct AuditReport {
  std::string representation;
  int n = 0;
  std::vector<RelatorCheck> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  nlohmann::json to_json() const;
};

/// Outcome of one exhaustive or symbolic check. `counterexample` is null on
/// pass; `parts` holds sub-checks when the check is a conjunction.
struct CheckReport {
  std::string check;
  bool pass = true;
  nlohmann::json counterexample = nullptr;
  std::vector<CheckReport> parts;
  nlohmann::json details = nullptr;

  static CheckReport all_of(std::string check, std::vector<CheckReport> parts);
  nlohmann::json to_json() const;
};

/// `evaluate` maps a BraidWord to an image; `mismatch` returns an empty
/// string when two images agree and a description of the first difference
/// otherwise.
template <class Evaluate, class Mismatch>
AuditReport audit_relators(std::string name, int n, bool virtual_group, Evaluate&& evaluate,
                           Mismatch&& mismatch) {
  AuditReport report{std::move(name), n, {}};
  for (const auto& r : relator_catalog(n, virtual_group)) {
    auto lhs = evaluate(r.lhs);
    auto rhs = evaluate(r.rhs);
    std::string diff = mismatch(lhs, rhs);
    report.checks.push_back({r.tag, r.lhs.str(), r.rhs.str(), diff.empty(), diff});
  }
  return report;
}

}  // namespace braidrep
