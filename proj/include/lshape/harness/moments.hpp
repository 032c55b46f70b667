#pragma once

#include "lshape/eqmeasure/solution.hpp"
#include "lshape/exact/dims.hpp"

namespace lshape::harness {

struct MomentCheck {
  double R = 0, Q = 0;
  Rational alpha;
  Rational dalpha;
  exact::LshapeDims dims;
  double lhs = 0;  // (1/s^2) d log I / d log alpha, central difference
  double rhs = 0;  // E from the equilibrium measure
  double rel_deviation = 0;
  eqmeasure::Regime regime = eqmeasure::Regime::kIA;
};

/// Compares the finite-s derivative of log I_{r,s,q}(alpha) in log alpha with
/// the continuum first moment at r = round(R s), q = round(Q s). The
/// difference uses alpha +- dalpha exactly.
MomentCheck moment_derivative_check(double R, double Q, const Rational& alpha, int s,
                                    const Rational& dalpha = Rational(1, 100));

}  // namespace lshape::harness
