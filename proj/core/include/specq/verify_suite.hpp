#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace specq {

// One acceptance check: a named, self-contained verification with a
// one-line outcome. The suite is the contract the library is judged by.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  long long elapsed_ms = 0;

  nlohmann::json to_json() const {
    return {{"index", index},
            {"name", name},
            {"pass", pass},
            {"detail", detail},
            {"elapsed_ms", elapsed_ms}};
  }
};

// Runs the nine acceptance checks in order, each exhaustive at its stated
// scale. jobs parallelizes the underlying searches; results are identical
// for any jobs value. A positive lemma_order_clamp caps the per-lemma sweep
// orders below their defaults (a speed knob for interactive runs; the
// acceptance gate itself always runs unclamped).
std::vector<CriterionResult> run_acceptance(int jobs = 1, int lemma_order_clamp = 0);

}  // namespace specq
