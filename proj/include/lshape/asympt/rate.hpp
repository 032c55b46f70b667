#pragma once

#include <cmath>
#include <string_view>

#include "lshape/asympt/eta.hpp"
#include "lshape/exact/dims.hpp"

namespace lshape::asympt {

namespace detail_rate {

/// c log(v) with 0 log 0 = 0 and an error on negative arguments.
template <class Real>
Real clog(const Real& c, const Real& v) {
  require(!(v < 0), ErrorCode::kLogDomain, "negative logarithm argument");
  return xlogy(c, v);
}

/// c log(1 + d/b), accurate when d is small relative to b.
template <class Real>
Real clog_ratio(const Real& c, const Real& d, const Real& b) {
  using std::log1p;
  if (c == 0) return Real(0);
  return c * log1p(d / b);
}

}  // namespace detail_rate

/// chi(x, y; eta), the eight-logarithm form.
template <class Real>
Real chi(const ScaledPoint<Real>& p, const Real& eta) {
  using detail_rate::clog;
  using std::log;
  const Real x = p.x, y = p.y, w = 1 - x - y;
  return -clog(x * y, eta) + clog(w * w / 2, Real(1 - eta)) + log(1 + eta) / 2 -
         clog((1 - x) * y, Real(y + (1 - x) * eta)) - clog(x * (1 - y), Real(x + (1 - y) * eta)) +
         clog(x * (1 - x), Real(x + (1 - x) * eta)) + clog(y * (1 - y), Real(y + (1 - y) * eta)) +
         clog((x - y) * (x - y) / 2, Real(x + y + (2 - x - y) * eta));
}

template <class Real>
Real chi0(const ScaledPoint<Real>& p) {
  using detail_rate::clog;
  const Real x = p.x, y = p.y, w = 1 - x - y;
  return -clog(x * x / 2, x) - clog((1 - x) * (1 - x) / 2, Real(1 - x)) - clog(y * y / 2, y) -
         clog((1 - y) * (1 - y) / 2, Real(1 - y)) + clog(w * w / 2, w);
}

/// Rate phi from a known eta in D_II: each term is c log(A(h)/A(eta)) with
/// A affine in eta, evaluated as log1p of the increment so the cubic
/// vanishing near the arc is resolved.
template <class Real>
Real varphi_from_eta(const ScaledPoint<Real>& p, const Real& eta) {
  using detail_rate::clog_ratio;
  const Real x = p.x, y = p.y, w = 1 - x - y;
  const Real h = h_param(p);
  const Real d = h - eta;
  return clog_ratio(x * y, d, eta) - clog_ratio(w * w / 2, Real(-d), Real(1 - eta)) -
         clog_ratio(Real(0.5), d, Real(1 + eta)) +
         clog_ratio((1 - x) * y, Real((1 - x) * d), Real(y + (1 - x) * eta)) +
         clog_ratio(x * (1 - y), Real((1 - y) * d), Real(x + (1 - y) * eta)) -
         clog_ratio((1 - x) * x, Real((1 - x) * d), Real(x + (1 - x) * eta)) -
         clog_ratio((1 - y) * y, Real((1 - y) * d), Real(y + (1 - y) * eta)) -
         clog_ratio((x - y) * (x - y) / 2, Real((2 - x - y) * d), Real(x + y + (2 - x - y) * eta));
}

/// phi(x, y; alpha): zero in D_I and on the arc, positive in D_II. At y = 0
/// the corner is empty and phi = 0.
template <class Real>
Real varphi(const ScaledPoint<Real>& p, const Real& alpha, const EtaOptions& opt = {}) {
  require(alpha > 0 && alpha < 1, ErrorCode::kInvalidArgument, "alpha must lie in (0,1)");
  if (p.y == 0) return Real(0);
  if (classify_point(p, alpha, Real(opt.arc_tol)) != RegionTag::kDII) return Real(0);
  return varphi_from_eta(p, eta_root(p, alpha, EtaMethod::kClosedForm, opt).eta);
}

/// Same quantity through chi(eta) - chi0.
template <class Real>
Real varphi_chi(const ScaledPoint<Real>& p, const Real& alpha, const EtaOptions& opt = {}) {
  if (p.y == 0) return Real(0);
  if (classify_point(p, alpha, Real(opt.arc_tol)) != RegionTag::kDII) return Real(0);
  return chi(p, eta_root(p, alpha, EtaMethod::kClosedForm, opt).eta) - chi0(p);
}

/// (1 - xy) f = -log sqrt(rho) + xy log w2 + phi.
template <class Real>
Real free_energy(const ScaledPoint<Real>& p, const exact::ModelParams& params,
                 const EtaOptions& opt = {}) {
  using std::log;
  require(p.x * p.y < 1, ErrorCode::kInvalidArgument, "need xy < 1");
  const Real alpha = convert<Real>(params.alpha);
  const Real rho = convert<Real>(params.rho);
  const auto w = params.weights<Real>();
  const Real phi = p.y == 0 ? Real(0) : varphi(p, alpha, opt);
  return (-log(rho) / 2 + detail_rate::clog(Real(p.x * p.y), w[2]) + phi) / (1 - p.x * p.y);
}

/// alpha -> 1 limit of phi + xy log(1 - alpha).
template <class Real>
Real psi(const ScaledPoint<Real>& p) {
  using detail_rate::clog;
  const Real x = p.x, y = p.y, w = 1 - x - y;
  return clog((x + y) * (x + y) / 2, Real(x + y)) - clog(w * w / 2, w) - clog(x * x / 2, x) +
         clog((1 - x) * (1 - x) / 2, Real(1 - x)) - clog(y * y / 2, y) +
         clog((1 - y) * (1 - y) / 2, Real(1 - y));
}

template <class Real>
Real Phi_at_alpha1(const Real& R, const Real& Q) {
  using detail_rate::clog;
  require(R >= 1 && Q >= 0, ErrorCode::kInvalidArgument, "need R >= 1, Q >= 0");
  const auto sq2 = [](const Real& v) { return v * v / 2; };
  return -clog(sq2(R), R) + clog(sq2(R - 1), Real(R - 1)) - clog(sq2(R + Q), Real(R + Q)) +
         clog(sq2(1 + Q), Real(1 + Q)) - clog(sq2(2 + Q), Real(2 + Q)) +
         clog(sq2(R + Q + 1), Real(R + Q + 1));
}

/// The seven-logarithm part of Phi in Regime II.
template <class Real>
Real Omega(const Real& R, const Real& Q, const Real& eta) {
  using detail_rate::clog;
  const Real half(0.5);
  return clog(Real(half + R - R * R / 2), Real(1 - eta)) +
         clog(Real(half - R + Q - (R + Q) * (R + Q) / 2), Real(1 + eta)) +
         clog(Real(half + R), Real(1 + R * eta)) +
         clog(Real(half - R + Q - R * Q), Real(1 + Q + R * eta)) +
         clog(Real(half - R), Real(1 + (R + Q) * eta)) +
         clog(Real(half + R + Q + R * Q + Q * Q), Real(1 + Q + (R + Q) * eta)) -
         clog(Real((2 + Q) * (2 + Q) / 2), Real(2 + Q + (2 * R + Q) * eta));
}

/// C(R, Q), fixed by matching Omega at eta = 0 to Phi at alpha = 1.
template <class Real>
Real integration_constant(const Real& R, const Real& Q) {
  using detail_rate::clog;
  const auto sq2 = [](const Real& v) { return v * v / 2; };
  return -clog(sq2(R), R) + clog(sq2(R - 1), Real(R - 1)) - clog(sq2(R + Q), Real(R + Q)) -
         clog(sq2(1 + Q), Real(1 + Q)) + clog(sq2(R + Q + 1), Real(R + Q + 1));
}

/// Phi(R, Q) = lim log I / s^2.
template <class Real>
Real Phi_scaled(const Real& R, const Real& Q, const Real& alpha, const EtaOptions& opt = {}) {
  using std::log;
  require(alpha > 0 && alpha < 1, ErrorCode::kInvalidArgument, "alpha must lie in (0,1)");
  const auto p = ScaledPoint<Real>::from_gas(R, Q);
  if (classify_point(p, alpha, Real(opt.arc_tol)) != RegionTag::kDII)
    return -(Q + 1) * log(1 - alpha) + log(alpha) / 2;
  const Real eta = eta_root(p, alpha, EtaMethod::kClosedForm, opt).eta;
  return Omega(R, Q, eta) + integration_constant(R, Q);
}

/// The two candidate left-side prefactors relating phi to Phi.
enum class RatePrefactor { kUnit, kOneMinusXSquared };

constexpr std::string_view to_string(RatePrefactor m) {
  return m == RatePrefactor::kUnit ? "unit" : "(1-x)^2";
}

/// phi from Phi via  k * phi = -xy log(1-a) + y^2 log sqrt(a) - y^2 Phi(R, Q).
template <class Real>
Real varphi_from_Phi(const ScaledPoint<Real>& p, const Real& alpha, RatePrefactor mapping,
                     const EtaOptions& opt = {}) {
  using std::log;
  if (p.y == 0) return Real(0);
  const Real rhs = -p.x * p.y * log(1 - alpha) + p.y * p.y * log(alpha) / 2 -
                   p.y * p.y * Phi_scaled(p.R(), p.Q(), alpha, opt);
  if (mapping == RatePrefactor::kUnit) return rhs;
  return rhs / ((1 - p.x) * (1 - p.x));
}

/// Third alpha-derivative of phi at alpha_c:
/// sqrt(x(1-x)y(1-y)) / (2 ac^2 (1-ac)^2).
template <class Real>
Real cubic_coeff_C(const ScaledPoint<Real>& p) {
  using std::sqrt;
  require(p.x + p.y < 1, ErrorCode::kArcDegenerate, "C undefined on x + y = 1");
  const Real ac = alpha_c(p);
  return sqrt(p.x * (1 - p.x) * p.y * (1 - p.y)) / (2 * ac * ac * (1 - ac) * (1 - ac));
}

/// d log(alpha) / d eta at eta = h, as the six-term sum.
template <class Real>
Real dlog_alpha_deta_at_h(const ScaledPoint<Real>& p) {
  const Real x = p.x, y = p.y, h = h_param(p);
  return -2 / (1 - h) - 2 / (1 + h) + (1 - x) / (y + (1 - x) * h) + (1 - y) / (x + (1 - y) * h) -
         (1 - x) / (x + (1 - x) * h) - (1 - y) / (y + (1 - y) * h);
}

/// The same derivative in closed form, -4(1-x)(1-y)/(1-x-y).
template <class Real>
Real dlog_alpha_deta_at_h_closed(const ScaledPoint<Real>& p) {
  require(p.x + p.y < 1, ErrorCode::kArcDegenerate, "undefined on x + y = 1");
  return -4 * (1 - p.x) * (1 - p.y) / (1 - p.x - p.y);
}

/// Angle forms on the arc: -(sin phi + sin lambda)^2/(sin lambda sin phi) and
/// C = 2 sin(phi - lambda) sin(phi + lambda) / sin^4(2 lambda).
template <class Real>
Real dlog_alpha_deta_angle(const Real& phi, const Real& lambda) {
  using std::sin;
  const Real s = sin(phi) + sin(lambda);
  return -s * s / (sin(lambda) * sin(phi));
}

template <class Real>
Real cubic_coeff_angle(const Real& phi, const Real& lambda) {
  using std::sin;
  const Real s2 = sin(2 * lambda);
  return 2 * sin(phi - lambda) * sin(phi + lambda) / (s2 * s2 * s2 * s2);
}

}  // namespace lshape::asympt
