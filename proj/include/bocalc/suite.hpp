#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bocalc::suite {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  nlohmann::json to_json() const;
};

// Criteria 1..13. Each check carries its own brute-force reference.
std::vector<CriterionResult> run_checks();
// Criterion 14: renders run_checks() twice and compares the bytes.
CriterionResult determinism_check();
// All fourteen, in order.
std::vector<CriterionResult> run_acceptance();

nlohmann::json to_json(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace bocalc::suite
