#pragma once

// The acceptance suite: twelve exact checks over the construction families.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bent::verify {

enum class Level { kFast, kFull };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;  // 0: no time limit
  std::string detail;
};

struct SuiteOptions {
  Level level = Level::kFast;
  std::uint64_t seed = 0;
  std::vector<int> only;  // empty: all criteria
};

std::vector<CriterionResult> run_suite(
    const SuiteOptions& opts, const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS C01 bentness-grid 1.234s (budget 120s): detail"
std::string format_result(const CriterionResult& r);
std::string results_json(const std::vector<CriterionResult>& rs);

}  // namespace bent::verify
