#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "chtilde/recurrence_engine.hpp"
#include "chtilde/report.hpp"

namespace chtilde {

struct SuiteConfig {
  /// Depth bound for engine suites; index bound for the product-rule suite
  /// (the three-factor rules use n - 2).
  int n = 3;
  int trials = 200;
  std::uint64_t seed = 1;
};

/// lemmas, w-theorem, multiset, cone, shift, positivity, cross, oracle
std::span<const std::string_view> suite_names();

bool is_suite_name(std::string_view name);

/// Runs one named suite. Throws std::invalid_argument on an unknown name.
Report run_suite(std::string_view name, const SuiteConfig& config, RecurrenceEngine& engine);

}  // namespace chtilde
