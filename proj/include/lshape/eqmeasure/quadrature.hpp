#pragma once

#include <boost/math/special_functions/legendre.hpp>

#include <cmath>
#include <vector>

namespace lshape::eqmeasure {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Gauss-Legendre rule from the zeros of P_n, with w = 2/((1-x^2) P_n'(x)^2).
inline GaussRule make_gauss_rule(int n) {
  const auto half = boost::math::legendre_p_zeros<double>(n);
  GaussRule rule;
  for (double x : half) {
    const double d = boost::math::legendre_p_prime<double>(n, x);
    const double w = 2.0 / ((1 - x * x) * d * d);
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
    if (x != 0) {
      rule.nodes.push_back(-x);
      rule.weights.push_back(w);
    }
  }
  return rule;
}

/// Rules for 64, 128 and 256 nodes, built once and immutable afterwards.
inline const GaussRule& gauss_rule(int n) {
  static const GaussRule r64 = make_gauss_rule(64);
  static const GaussRule r128 = make_gauss_rule(128);
  static const GaussRule r256 = make_gauss_rule(256);
  return n <= 64 ? r64 : (n <= 128 ? r128 : r256);
}

struct QuadratureResult {
  double value = 0;
  int nodes = 0;
  double change = 0;  // |I_n - I_{n/2}| at the last doubling
  bool converged = false;
};

/// int_a^b f(mu) dmu with mu = a + (b-a) sin^2(theta), then Gauss-Legendre in
/// theta on [0, pi/2]; 64, 128, 256 nodes until two levels agree to `tol`.
template <class F>
QuadratureResult integrate_band(F&& f, double a, double b, double tol = 1e-10) {
  const double half_pi = M_PI / 2;
  const auto apply = [&](int n) {
    const auto& rule = gauss_rule(n);
    double sum = 0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double theta = half_pi * (rule.nodes[i] + 1) / 2;
      const double s = std::sin(theta), c = std::cos(theta);
      const double mu = a + (b - a) * s * s;
      sum += rule.weights[i] * f(mu) * 2 * s * c;
    }
    return sum * (b - a) * half_pi / 2;
  };
  QuadratureResult out;
  double previous = apply(64);
  for (int n = 128; n <= 256; n *= 2) {
    const double current = apply(n);
    out.value = current;
    out.nodes = n;
    out.change = std::fabs(current - previous);
    if (out.change <= tol) {
      out.converged = true;
      return out;
    }
    previous = current;
  }
  return out;
}

}  // namespace lshape::eqmeasure
