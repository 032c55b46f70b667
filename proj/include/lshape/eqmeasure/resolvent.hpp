#pragma once

#include <cmath>
#include <complex>

#include "lshape/eqmeasure/solution.hpp"

namespace lshape::eqmeasure {

/// W(z) = int rho0(mu)/(z - mu) dmu for z off [0, R]. Every square root is a
/// separate principal root, which keeps W real on (R, inf) and gives the
/// upper boundary value as Im z -> 0+.
template <class Real>
complex_t<Real> resolvent(const complex_t<Real>& z, const RegimeSolution<Real>& sol,
                          const GasParams<Real>& g) {
  using C = complex_t<Real>;
  using std::log;
  using std::sqrt;
  require(!(z.imag() == 0 && z.real() >= 0 && z.real() <= g.R), ErrorCode::kOnCut,
          "z lies on [0, R]");
  const Real a = sol.a, b = sol.b, Q = g.Q, R = g.R;
  const C za = sqrt(z - C(a)), zb = sqrt(z - C(b));
  const C left = sqrt(a) * zb + sqrt(b) * za;
  const C shifted = sqrt(a + Q) * zb + sqrt(b + Q) * za;
  const C base(-log(g.alpha) / 2);
  switch (sol.regime) {
    case Regime::kIA: {
      const C edge = sqrt(b - a) * sqrt(z);
      return base - log(left / edge) - log(shifted / edge);
    }
    case Regime::kIB:
      return base + log(left / shifted);
    case Regime::kIIA: {
      const C wall = sqrt(R - a) * zb + sqrt(R - b) * za;
      return base + log(z / (z - C(R))) - log(left / wall) - log(shifted / wall);
    }
    case Regime::kIIB: {
      const C wall = sqrt(R - a) * zb + sqrt(R - b) * za;
      return base - Real(2) * log(sqrt(b - a) * sqrt(z - C(R)) / wall) + log(left / shifted);
    }
  }
  return C(0);
}

/// rho0(mu) ~ -Im W(mu + i eps) / pi.
template <class Real>
Real density_oracle(const Real& mu, const Real& eps, const RegimeSolution<Real>& sol,
                    const GasParams<Real>& g) {
  return -resolvent(complex_t<Real>(mu, eps), sol, g).imag() / pi<Real>();
}

/// |W(mu + i eps) + W(mu - i eps) - V'(mu)| in the band.
template <class Real>
Real variational_residual(const Real& mu, const Real& eps, const RegimeSolution<Real>& sol,
                          const GasParams<Real>& g) {
  using std::abs;
  using C = complex_t<Real>;
  const C up = resolvent(C(mu, eps), sol, g), down = resolvent(C(mu, -eps), sol, g);
  return abs(up + down - C(potential_derivative(mu, g)));
}

/// E = Re[z^2 (W(z) - 1/z)] at z = i |z|. On the imaginary axis the
/// second-moment term is purely imaginary, so the bias is O(|z|^-2).
template <class Real>
Real first_moment_large_z(const Real& modulus, const RegimeSolution<Real>& sol,
                          const GasParams<Real>& g) {
  using C = complex_t<Real>;
  const C z(Real(0), modulus);
  const C w = resolvent(z, sol, g);
  return (z * z * (w - C(1) / z)).real();
}

}  // namespace lshape::eqmeasure
