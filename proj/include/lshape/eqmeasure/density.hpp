#pragma once

#include <cmath>

#include "lshape/eqmeasure/quadrature.hpp"
#include "lshape/eqmeasure/resolvent.hpp"

namespace lshape::eqmeasure {

/// Which profile to use in the IIB band.
enum class IIBDensity {
  kOracle,   // -Im W(mu + i0)/pi from the resolvent (default)
  kArctan,  // the closed arctan combination; edge limits -1 and 0
};

namespace detail_density {

/// (1/pi) arctan sqrt(p (b - mu) / (q (mu - a))), finite at both edges.
template <class Real>
Real edge_angle(const Real& p, const Real& q, const Real& mu, const Real& a, const Real& b) {
  using std::atan2;
  using std::sqrt;
  return atan2(sqrt(p * (b - mu)), sqrt(q * (mu - a))) / pi<Real>();
}

}  // namespace detail_density

/// Closed-form band densities; for IIB this is the arctan combination
/// regardless of the default, see `band_density`.
template <class Real>
Real band_density_formula(const Real& mu, const RegimeSolution<Real>& sol,
                          const GasParams<Real>& g) {
  using detail_density::edge_angle;
  const Real a = sol.a, b = sol.b, Q = g.Q, R = g.R;
  require(mu >= a && mu <= b, ErrorCode::kOutsideBand, "mu outside [a, b]");
  const Real t1 = edge_angle(a, b, mu, a, b);
  const Real t2 = edge_angle(Real(a + Q), Real(b + Q), mu, a, b);
  switch (sol.regime) {
    case Regime::kIA: return t1 + t2;
    case Regime::kIB: return -t1 + t2;
    case Regime::kIIA: return 1 + t1 + t2 - 2 * edge_angle(Real(R - a), Real(R - b), mu, a, b);
    case Regime::kIIB: return t1 - t2 - 2 * edge_angle(Real(R - a), Real(R - b), mu, a, b);
  }
  return Real(0);
}

/// IIB band density from the resolvent, evaluated in quad precision at
/// Im z = 1e-30 so the limit is taken well below double resolution.
inline double iib_oracle_density(double mu, const RegimeSolution<double>& sol,
                                 const GasParams<double>& g) {
  RegimeSolution<Quad> sq;
  sq.regime = sol.regime;
  sq.a = sol.a;
  sq.b = sol.b;
  sq.nu = sol.nu;
  const GasParams<Quad> gq{Quad(g.R), Quad(g.Q), Quad(g.alpha)};
  return static_cast<double>(density_oracle(Quad(mu), Quad(1e-30), sq, gq));
}

inline double band_density(double mu, const RegimeSolution<double>& sol,
                           const GasParams<double>& g, IIBDensity iib = IIBDensity::kOracle) {
  if (sol.regime == Regime::kIIB && iib == IIBDensity::kOracle) {
    require(mu >= sol.a && mu <= sol.b, ErrorCode::kOutsideBand, "mu outside [a, b]");
    return iib_oracle_density(mu, sol, g);
  }
  return band_density_formula(mu, sol, g);
}

/// Gap values: 1 on saturated gaps, 0 on voids.
inline double left_gap_value(Regime r) { return r == Regime::kIA || r == Regime::kIIA ? 1.0 : 0.0; }
inline double right_gap_value(Regime r) { return r == Regime::kIIA || r == Regime::kIIB ? 1.0 : 0.0; }

/// rho0 on all of [0, R].
struct DensityProfile {
  RegimeSolution<double> sol;
  GasParams<double> gas;
  IIBDensity iib = IIBDensity::kOracle;

  double operator()(double mu) const {
    require(mu >= 0 && mu <= gas.R, ErrorCode::kWall, "mu outside [0, R]");
    if (mu < sol.a) return left_gap_value(sol.regime);
    if (mu > sol.b) return right_gap_value(sol.regime);
    return band_density(mu, sol, gas, iib);
  }

  /// Total length of saturated gaps and the first moment they carry.
  double saturated_mass() const {
    return left_gap_value(sol.regime) * sol.a + right_gap_value(sol.regime) * (gas.R - sol.b);
  }
  double saturated_moment() const {
    return left_gap_value(sol.regime) * sol.a * sol.a / 2 +
           right_gap_value(sol.regime) * (gas.R * gas.R - sol.b * sol.b) / 2;
  }
};

inline DensityProfile profile(const RegimeSolution<double>& sol, const GasParams<double>& gas,
                              IIBDensity iib = IIBDensity::kOracle) {
  return DensityProfile{sol, gas, iib};
}

struct MomentQuadrature {
  QuadratureResult mass;    // band part
  QuadratureResult moment;  // band part
  double normalization;     // saturated + band mass
  double first_moment;      // saturated + band moment
};

inline MomentQuadrature moments(const DensityProfile& p, double tol = 1e-10) {
  const double a = p.sol.a, b = p.sol.b;
  const auto rho = [&](double mu) { return band_density(mu, p.sol, p.gas, p.iib); };
  MomentQuadrature m;
  m.mass = integrate_band(rho, a, b, tol);
  m.moment = integrate_band([&](double mu) { return mu * rho(mu); }, a, b, tol);
  m.normalization = p.saturated_mass() + m.mass.value;
  m.first_moment = p.saturated_moment() + m.moment.value;
  return m;
}

}  // namespace lshape::eqmeasure
