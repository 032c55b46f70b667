#pragma once

#include <vector>

#include "lshape/eqmeasure/density.hpp"
#include "lshape/harness/report.hpp"

namespace lshape::harness {

struct ConsistencyOptions {
  int bound_samples = 1000;
  double bound_tol = 1e-12;
  double normalization_tol = 1e-8;
  double moment_tol = 1e-8;
  double variational_tol = 1e-3;  // at eps = 1e-6
  double large_z_tol = 1e-6;
  std::vector<double> large_z = {1e6};
  eqmeasure::IIBDensity iib = eqmeasure::IIBDensity::kOracle;
};

/// Self-consistency of one gas: density bounds, normalization, first moment
/// by quadrature, the variational condition at two offsets, and E from the
/// large-z expansion of the resolvent (evaluated in quad precision).
std::vector<CheckResult> resolvent_consistency(const eqmeasure::GasParams<double>& gas,
                                               const ConsistencyOptions& opt = {});

}  // namespace lshape::harness
