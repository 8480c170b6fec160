#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zpdlab/io.hpp"

namespace zpdlab {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::optional<std::string> only;  // run a single scenario by name
  std::size_t trials = 20;          // random trials for the diagonalizability sweep
};

struct ScenarioResult {
  std::string name;
  std::string anchor;  // the claim being checked, in one line
  bool passed = false;
  json dims = json::object();
  std::uint64_t seed = 0;
  double elapsed_ms = 0;
  std::string detail;
  // Certified verdicts on seed-independent inputs, e.g. "T3:zpd:yes".
  std::vector<std::string> certified;
};

std::vector<std::string> scenario_names();

// Scenarios run in a fixed order.  Throws ArgumentError for an unknown `only`.
std::vector<ScenarioResult> run_suite(const SuiteOptions& opts);

json scenario_to_json(const ScenarioResult& r);
json suite_to_json(const std::vector<ScenarioResult>& results, const SuiteOptions& opts);
std::string suite_table(const std::vector<ScenarioResult>& results);

}  // namespace zpdlab
