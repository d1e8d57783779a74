// Acceptance gate: runs every check in the suite and prints one line per
// criterion.  Exits nonzero if any fails, so ctest reports the gate red.
#include <cstdio>

#include "hkl/checks.hpp"

int main() {
  std::vector<hkl::CheckResult> results = hkl::run_all_checks();
  int failed = 0;
  int i = 0;
  for (const hkl::CheckResult& r : results) {
    ++i;
    std::printf("[%2d/%zu] %s %-20s %s\n", i, results.size(),
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
