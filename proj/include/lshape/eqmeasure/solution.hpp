#pragma once

#include <cmath>
#include <optional>

#include "lshape/detail/eta_quartic.hpp"
#include "lshape/eqmeasure/gas.hpp"

namespace lshape::eqmeasure {

template <class Real>
struct RegimeTwoAux {
  Real Ap, Am, Bp, Bm, Cp, Cm;
  Real Np, Nm;  // R + Q + 1 and R - 1
  Real zp, zm;  // N+ - 2C+ and N- - 2C-
};

template <class Real>
struct RegimeSolution {
  Regime regime = Regime::kIA;
  Real a{};
  Real b{};
  int nu = 1;                 // sign in front of sqrt(a) in the end-point equations
  std::optional<Real> eta;    // Regime II only
  std::optional<Real> eta_quartic_gas;
  std::optional<RegimeTwoAux<Real>> aux;
};

struct SolveOptions {
  double critical_tol = 1e-12;  // relative band around critical lines
  double branch_tol = 1e-6;     // accepts a nu branch; the wrong one misses by O(0.1)
  double agree_tol = 1e-10;     // bisection eta vs quartic eta
};

/// Left side of alpha (1+e)^2 (1+Q+Re)(1+(R+Q)e) / ((1-e)^2 (1+Re)(1+Q+(R+Q)e)).
template <class Real>
Real alpha_eq_lhs(const GasParams<Real>& g, const Real& e) {
  const Real num = (1 + e) * (1 + e) * (1 + g.Q + g.R * e) * (1 + (g.R + g.Q) * e);
  const Real den = (1 - e) * (1 - e) * (1 + g.R * e) * (1 + g.Q + (g.R + g.Q) * e);
  return g.alpha * num / den;
}

/// Root of the alpha equation in [0, 1) by bisection to full precision.
template <class Real>
Real eta_gas(const GasParams<Real>& g) {
  Real lo(0), hi(1);
  for (int i = 0; i < 400; ++i) {
    const Real mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    if (alpha_eq_lhs(g, mid) < 1)
      lo = mid;
    else
      hi = mid;
  }
  require(hi < 1, ErrorCode::kNoEtaRoot, "alpha equation has no root in [0,1)");
  return (lo + hi) / 2;
}

/// eta from the trigonometric quartic solution with A = sqrt(a) N-/N+,
/// B = sqrt(1-a) Q/N+, branch (+,-).
template <class Real>
Real eta_quartic_gas(const GasParams<Real>& g) {
  using std::sqrt;
  const Real np = g.R + g.Q + 1, nm = g.R - 1;
  const Real A = sqrt(g.alpha) * nm / np, B = sqrt(1 - g.alpha) * g.Q / np;
  const auto roots = detail::eta_quartic_roots(A, B, g.alpha, Real(1 - g.alpha));
  require(roots.prescribed().in_unit_interval, ErrorCode::kNoEtaRoot,
          "(+,-) branch outside [0,1]");
  return roots.prescribed().eta;
}

template <class Real>
RegimeTwoAux<Real> regime_two_aux(const GasParams<Real>& g, const Real& e) {
  const Real R = g.R, Q = g.Q;
  const Real np = R + Q + 1, nm = R - 1;
  const Real den = (2 + Q + (2 * R + Q) * e) * (2 + Q + (2 * R + Q) * e);
  const Real f1 = 1 + R * e, f2 = 1 + Q + R * e, f3 = 1 + (R + Q) * e, f4 = 1 + Q + (R + Q) * e;
  RegimeTwoAux<Real> x;
  x.Np = np;
  x.Nm = nm;
  x.Cp = np * (1 - e) * f1 * f4 / den;
  x.Cm = nm * (1 + e) * f2 * f3 / den;
  x.Bp = np * (1 + e) * f2 * f4 / den;
  x.Bm = nm * (1 - e) * f1 * f3 / den;
  x.Ap = np * (1 + e) * f1 * f3 / den;
  x.Am = nm * (1 - e) * f2 * f4 / den;
  x.zp = np - 2 * x.Cp;
  x.zm = nm - 2 * x.Cm;
  return x;
}

struct EndpointResiduals {
  double first;
  double second;
  double max() const { return std::fabs(first) > std::fabs(second) ? std::fabs(first) : std::fabs(second); }
};

/// Regime I: (sqrt(b+Q) - sqrt(a+Q))/(sqrt b + nu sqrt a) = sqrt(alpha) and
/// (sqrt((a+Q)(b+Q)) + nu sqrt(ab) - Q)/2 = 1, nu = +1 (IA) or -1 (IB).
template <class Real>
EndpointResiduals regime_one_residuals(const Real& a, const Real& b, int nu,
                                       const GasParams<Real>& g) {
  using std::sqrt;
  const Real Q = g.Q;
  const Real r1 = (sqrt(b + Q) - sqrt(a + Q)) / (sqrt(b) + nu * sqrt(a)) - sqrt(g.alpha);
  const Real r2 = (sqrt((a + Q) * (b + Q)) + nu * sqrt(a * b) - Q) / 2 - 1;
  return {convert<double>(r1), convert<double>(r2)};
}

/// Regime II end-point equations, first line written with
/// sqrt(R-a) - sqrt(R-b) so that a < b gives a positive left side.
template <class Real>
EndpointResiduals regime_two_residuals(const Real& a, const Real& b, int nu,
                                       const GasParams<Real>& g) {
  using std::sqrt;
  const Real R = g.R, Q = g.Q;
  const Real ra = sqrt(R - a), rb = sqrt(R - b);
  const Real r1 = sqrt(g.alpha) * (ra - rb) / (ra + rb) * (sqrt(b) + nu * sqrt(a)) /
                      (sqrt(b + Q) - sqrt(a + Q)) - 1;
  const Real r2 = (nu * sqrt(a * b) + sqrt((a + Q) * (b + Q)) - Q) / 2 + ra * rb - 1;
  return {convert<double>(r1), convert<double>(r2)};
}

/// Regime-one end-points (a, b) = (1 -+ sqrt(alpha(1+Q)))^2 / (1 - alpha).
template <class Real>
std::pair<Real, Real> regime_one_endpoints(const GasParams<Real>& g) {
  using std::sqrt;
  const Real t = sqrt(g.alpha * (1 + g.Q));
  return {(1 - t) * (1 - t) / (1 - g.alpha), (1 + t) * (1 + t) / (1 - g.alpha)};
}

/// Regime label, errors on critical lines. Regime II is split by the sign of
/// A+ - A-, which is where the left end-point a = (sqrt A+ - sqrt A-)^2 vanishes.
template <class Real>
Regime classify_regime(const GasParams<Real>& g, const SolveOptions& opt = {}) {
  using std::abs;
  const Real tol(opt.critical_tol);
  const Real rc = g.Rc();
  require(abs(g.R - rc) > tol * (1 + rc), ErrorCode::kOnCriticalLine, "R = Rc");
  if (g.R > rc) {
    const Real qc = g.Qc();
    require(abs(g.Q - qc) > tol * (1 + qc), ErrorCode::kOnCriticalLine, "Q = Qc");
    return g.Q < qc ? Regime::kIA : Regime::kIB;
  }
  const auto x = regime_two_aux(g, eta_gas(g));
  require(abs(x.Ap - x.Am) > tol * x.Np, ErrorCode::kOnCriticalLine,
          "Q on the Regime II critical line (a = 0)");
  return x.Ap > x.Am ? Regime::kIIA : Regime::kIIB;
}

template <class Real>
RegimeSolution<Real> endpoints(const GasParams<Real>& g, const SolveOptions& opt = {}) {
  using std::abs;
  using std::sqrt;
  RegimeSolution<Real> sol;
  sol.regime = classify_regime(g, opt);
  if (!is_regime_two(sol.regime)) {
    std::tie(sol.a, sol.b) = regime_one_endpoints(g);
    sol.nu = sol.regime == Regime::kIA ? 1 : -1;
    return sol;
  }
  const Real e = eta_gas(g);
  const Real e_a = eta_quartic_gas(g);
  require(abs(e - e_a) <= Real(opt.agree_tol), ErrorCode::kMethodDisagreement,
          "quartic eta disagrees with the bisection root");
  const auto x = regime_two_aux(g, e);
  const Real sp = sqrt(x.Ap), sm = sqrt(x.Am);
  sol.b = (sp + sm) * (sp + sm);
  sol.a = (sp - sm) * (sp - sm);
  sol.eta = e;
  sol.eta_quartic_gas = e_a;
  sol.aux = x;
  // Both branches are tried on the same (a, b); exactly one must close.
  // The residuals lose accuracy as b -> R (they involve sqrt(R - b)), so the
  // acceptance band is wider than the end-point tolerance checked by callers.
  const bool plus_ok = regime_two_residuals(sol.a, sol.b, 1, g).max() <= opt.branch_tol;
  const bool minus_ok = regime_two_residuals(sol.a, sol.b, -1, g).max() <= opt.branch_tol;
  require(plus_ok || minus_ok, ErrorCode::kBranchMismatch, "neither nu branch satisfies the end-point equations");
  sol.nu = plus_ok && !minus_ok ? 1 : (!plus_ok && minus_ok ? -1 : (x.Ap > x.Am ? 1 : -1));
  const int expected = sol.regime == Regime::kIIA ? 1 : -1;
  require(sol.nu == expected, ErrorCode::kBranchMismatch, "nu branch inconsistent with regime");
  return sol;
}

/// Q at which a = 0 inside Regime II for fixed R and alpha, by bisection on
/// the sign of A+ - A-. Empty when no such Q exists on the Regime II side.
template <class Real>
std::optional<Real> regime_two_critical_Q(const Real& R, const Real& alpha) {
  using std::sqrt;
  const auto diff = [&](const Real& Q) {
    const auto g = GasParams<Real>{R, Q, alpha};
    const auto x = regime_two_aux(g, eta_gas(g));
    return x.Ap - x.Am;
  };
  // Regime II needs R < Rc(Q), i.e. Q > (sqrt(R(1-alpha)) - 1)^2/alpha - 1 once
  // sqrt(R(1-alpha)) > 1.
  Real q_lo(0);
  const Real t = sqrt(R * (1 - alpha)) - 1;
  if (t > 0) {
    const Real q_min = t * t / alpha - 1;
    if (q_min > 0) q_lo = q_min * (1 + Real(1e-9)) + Real(1e-12);
  }
  if (!(diff(q_lo) > 0)) return std::nullopt;
  Real q_hi = q_lo + 1;
  for (int i = 0; i < 200 && diff(q_hi) > 0; ++i) q_hi = 2 * q_hi + 1;
  if (diff(q_hi) > 0) return std::nullopt;
  for (int i = 0; i < 200; ++i) {
    const Real mid = (q_lo + q_hi) / 2;
    if (mid <= q_lo || mid >= q_hi) break;
    if (diff(mid) > 0)
      q_lo = mid;
    else
      q_hi = mid;
  }
  return (q_lo + q_hi) / 2;
}

/// E from the closed forms: Regime I (Q+1)alpha/(1-alpha) + 1/2, Regime II the
/// A, B, C combination.
template <class Real>
Real first_moment(const RegimeSolution<Real>& sol, const GasParams<Real>& g) {
  if (!is_regime_two(sol.regime)) return (g.Q + 1) * g.alpha / (1 - g.alpha) + Real(0.5);
  const auto& x = *sol.aux;
  return g.Q * g.Q / 4 + (2 + g.Q) * (x.Ap + x.Am) / 4 - g.Q * (x.Bp - x.Bm) / 4 +
         g.R * (x.Cp - x.Cm) / 2;
}

/// E written through the end-points only.
template <class Real>
Real first_moment_endpoints(const RegimeSolution<Real>& sol, const GasParams<Real>& g) {
  using std::sqrt;
  const Real a = sol.a, b = sol.b, Q = g.Q, R = g.R;
  Real e = (2 + Q) * (a + b) / 8 + Q * Q / 4 - Q * sqrt((a + Q) * (b + Q)) / 4;
  if (is_regime_two(sol.regime)) e += R * sqrt((R - a) * (R - b)) / 2;
  return e;
}

/// Q^2 z+ z- - (N- z+ + N+ z- - N+ N-)(z+ - z-)^2, relative to its largest term.
template <class Real>
Real curve_residual(const RegimeTwoAux<Real>& x, const Real& Q) {
  using std::abs;
  const Real lhs = Q * Q * x.zp * x.zm;
  const Real d = x.zp - x.zm;
  const Real rhs = (x.Nm * x.zp + x.Np * x.zm - x.Np * x.Nm) * d * d;
  const Real scale = abs(lhs) + abs(rhs) + abs(x.Np * x.Nm * d * d);
  return scale == 0 ? Real(0) : abs(lhs - rhs) / scale;
}

}  // namespace lshape::eqmeasure
