#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace massey::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
  double seconds = 0;
  double budget_seconds = 0;
};

struct SuiteOptions {
  std::vector<std::int64_t> primes{5, 7};
  std::vector<int> genera{2};
  std::uint64_t seed = 20240611;
  unsigned jobs = 1;
};

/// Parameter sets the acceptance binary pins for each criterion.
SuiteOptions pinned_options(int criterion);

/// Criterion 1..9 run against the given options. Never throws; exceptions
/// become failed checks. A check also fails when it overruns its budget.
CheckResult run_criterion(int criterion, const SuiteOptions& options);

/// All nine with the same options, sorted by name.
std::vector<CheckResult> run_suite(const SuiteOptions& options);

/// {"seed":..., "primes":[...], "genera":[...], "passed":..., "checks":[...]}
/// Timings are included only on request so that reports stay
/// byte-identical across runs.
nlohmann::json report_json(const SuiteOptions& options,
                           const std::vector<CheckResult>& checks,
                           bool with_timings);

/// Hand-picked word expressions followed by seeded random words;
/// 200 entries in all.
std::vector<std::string> parser_corpus(std::uint64_t seed);

}  // namespace massey::verify
