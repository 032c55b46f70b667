#pragma once

#include <cmath>
#include <string_view>

#include "lshape/error.hpp"
#include "lshape/scalar.hpp"

namespace lshape::eqmeasure {

enum class Regime { kIA, kIB, kIIA, kIIB };

constexpr std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kIA: return "IA";
    case Regime::kIB: return "IB";
    case Regime::kIIA: return "IIA";
    case Regime::kIIB: return "IIB";
  }
  return "?";
}

constexpr bool is_regime_two(Regime r) { return r == Regime::kIIA || r == Regime::kIIB; }

/// Continuum Coulomb gas on [0, R] with weight C(q+m, q) alpha^m, Q = q/s.
template <class Real>
struct GasParams {
  Real R{};
  Real Q{};
  Real alpha{};

  static GasParams make(const Real& R, const Real& Q, const Real& alpha) {
    require(R >= 1, ErrorCode::kInvalidArgument, "R must be >= 1");
    require(Q >= 0, ErrorCode::kInvalidArgument, "Q must be >= 0");
    require(alpha > 0 && alpha < 1, ErrorCode::kInvalidArgument, "alpha must lie in (0,1)");
    return GasParams{R, Q, alpha};
  }

  /// Minimum of the potential.
  Real mu0() const { return Q * alpha / (1 - alpha); }
  /// Q at which the left gap closes in Regime I.
  Real Qc() const { return (1 - alpha) / alpha; }
  /// R at which the right gap closes.
  Real Rc() const {
    using std::sqrt;
    const Real t = 1 + sqrt(alpha * (1 + Q));
    return t * t / (1 - alpha);
  }
};

template <class Real>
struct PotentialValue {
  Real V;
  Real Vprime;
};

/// V = -mu log a + mu log mu - (Q+mu) log(Q+mu) + Q log Q and its derivative.
/// V' is -inf at mu = 0 when Q = 0.
template <class Real>
PotentialValue<Real> potential(const Real& mu, const GasParams<Real>& gas) {
  using std::log;
  require(mu >= 0 && mu <= gas.R, ErrorCode::kWall, "mu outside [0, R]");
  const Real& Q = gas.Q;
  const Real V = -mu * log(gas.alpha) + xlogy(mu, mu) - xlogy(Real(Q + mu), Real(Q + mu)) +
                 xlogy(Q, Q);
  const Real Vp = -log(gas.alpha) + log(mu) - log(mu + Q);
  return {V, Vp};
}

/// V' extended off the wall interval, for residual checks.
template <class Real>
Real potential_derivative(const Real& mu, const GasParams<Real>& gas) {
  using std::log;
  return -log(gas.alpha) + log(mu) - log(mu + gas.Q);
}

}  // namespace lshape::eqmeasure
