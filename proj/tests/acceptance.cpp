// One line per acceptance criterion. Parameters and time budgets are pinned
// in verify::pinned_options and the suite's budget table.

#include <cstdio>
#include <cstdlib>

#include <fmt/format.h>

#include "verify/suite.hpp"

int main() {
  using namespace massey::verify;
  int failed = 0;
  for (int criterion = 1; criterion <= 9; ++criterion) {
    const CheckResult r = run_criterion(criterion, pinned_options(criterion));
    fmt::print("criterion {} {:<30} {}  {:6.2f}s / {:.0f}s  {}\n", criterion,
               r.name, r.passed ? "PASS" : "FAIL", r.seconds, r.budget_seconds,
               r.detail);
    std::fflush(stdout);
    failed += !r.passed;
  }
  fmt::print("{} of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
