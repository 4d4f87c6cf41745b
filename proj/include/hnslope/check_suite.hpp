#pragma once

// Seeded property suites behind `hnslope check`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hnslope {

struct CheckConfig {
  std::uint64_t seed = 42;
  /// Cases per suite; each suite has its own small default.
  std::optional<std::size_t> cases;
  /// Empty: all suites.
  std::vector<std::string> suites;
  /// Test hook: perturbs the polygon-law oracle so that suite must fail.
  bool break_oracle = false;
};

struct CheckFailure {
  std::uint64_t seed = 0;
  std::string input;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<CheckFailure> failures;
};

const std::vector<std::string>& check_suite_names();

/// Throws InvalidArgument for an unknown suite name.
std::vector<SuiteReport> run_check_suite(const CheckConfig& config);

/// {"seed": ..., "suites": [{"suite", "cases", "failures": [{"seed", "input", "expected", "got"}]}]}
std::string report_json(const CheckConfig& config, const std::vector<SuiteReport>& reports);

}  // namespace hnslope
