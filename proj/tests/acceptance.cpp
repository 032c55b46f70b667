#include <cstdio>
#include <exception>

#include "lshape/harness/suites.hpp"

using namespace lshape::harness;

int main() {
  int failures = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    CriterionResult c;
    try {
      c = run_criterion(id);
    } catch (const std::exception& e) {
      std::printf("criterion %d [PRIMARY] FAIL (exception: %s)\n", id, e.what());
      ++failures;
      continue;
    }
    std::printf("criterion %d [PRIMARY] %s: %s (%.2f s)\n", id, c.title.c_str(), c.pass ? "PASS" : "FAIL",
                c.seconds);
    for (const auto& k : c.checks)
      std::printf("    %-34s residual %.3e  tolerance %.3e  %s\n", k.check_name.c_str(), k.residual, k.tolerance,
                  k.pass ? "ok" : "FAILED");
    if (!c.pass) ++failures;
  }
  std::printf("%d of %d criteria passed\n", kCriterionCount - failures, kCriterionCount);
  return failures == 0 ? 0 : 1;
}
