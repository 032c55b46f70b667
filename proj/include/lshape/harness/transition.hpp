#pragma once

#include <vector>

#include "lshape/asympt/rate.hpp"

namespace lshape::harness {

enum class Spacing { kGeometric, kLinear };

struct TransitionSample {
  double alpha = 0;
  double offset = 0;  // alpha - alpha_c
  double phi = 0;
};

struct TransitionFit {
  double x = 0, y = 0;
  double alpha_c = 0;
  std::vector<TransitionSample> samples;
  double exponent = 0;        // slope of log phi against log(alpha - alpha_c)
  double r_squared = 0;
  double cubic_prefactor = 0;  // K in phi ~ K (alpha - alpha_c)^3
  double amplitude = 0;        // 6 K, comparable with the third derivative
  double c_formula = 0;
  double c_fd = 0;             // finite-difference third derivative, Quad
};

/// Samples phi on [alpha_c + lo, alpha_c + hi] with n points. Offsets must be
/// positive; a window reaching alpha_c is rejected with window-below-critical.
TransitionFit transition_fit(double x, double y, double offset_lo, double offset_hi, int n,
                             Spacing spacing = Spacing::kGeometric);

/// Same fit with the point displaced from the arc point (phi, lambda) along
/// the unit normal into D_II at fixed alpha = sin^2 lambda.
TransitionFit transition_fit_normal(double phi_angle, double lambda, double offset_lo,
                                    double offset_hi, int n);

/// Third alpha-derivative of phi at alpha_c from one-sided differences with
/// one Richardson step, evaluated in quad precision.
double cubic_coeff_fd(double x, double y, double h = 2e-3);

}  // namespace lshape::harness
