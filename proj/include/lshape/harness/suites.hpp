#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lshape/harness/report.hpp"

namespace lshape::harness {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool pass = false;
};

/// Acceptance criteria 1..9. `tol_scale` multiplies every numeric tolerance;
/// runtime limits are not scaled.
CriterionResult run_criterion(int id, double tol_scale = 1.0, int jobs = 1);

inline constexpr int kCriterionCount = 9;

/// Criteria grouped by module: exactcore {1,2}, asympt {3,4}, eqmeasure
/// {5,6}, harness {7,8,9}, all. Throws kInvalidArgument for unknown names.
std::vector<int> suite_criteria(std::string_view suite);

std::vector<CriterionResult> run_suite(std::string_view suite, double tol_scale = 1.0, int jobs = 1);

Json to_json(const CriterionResult& c);

}  // namespace lshape::harness
