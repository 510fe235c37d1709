#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace specq {

// Outcome of one verified claim. `not_desk_verifiable` marks claims whose
// hypotheses cannot be exhausted at the configured caps; the verdict then
// reports only what was checked.
struct VerificationReport {
  std::string claim;
  nlohmann::json params;
  bool verdict = false;
  bool not_desk_verifiable = false;
  std::vector<std::string> witnesses;  // graph6 of the graphs behind the verdict
  std::string details;
  long long elapsed_ms = 0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["claim"] = claim;
    if (!params.is_null()) j["params"] = params;
    j["verdict"] = verdict;
    if (not_desk_verifiable) j["not_desk_verifiable"] = true;
    if (!witnesses.empty()) j["witnesses"] = witnesses;
    if (!details.empty()) j["details"] = details;
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

}  // namespace specq
