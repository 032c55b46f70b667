#pragma once

#include <cmath>
#include <string_view>

#include "lshape/asympt/point.hpp"
#include "lshape/detail/eta_quartic.hpp"

namespace lshape::asympt {

enum class EtaMethod { kClosedForm, kBisection, kBoth };

constexpr std::string_view to_string(EtaMethod m) {
  switch (m) {
    case EtaMethod::kClosedForm: return "closed-form";
    case EtaMethod::kBisection: return "bisection";
    case EtaMethod::kBoth: return "both";
  }
  return "?";
}

template <class Real>
struct EtaRoot {
  Real eta{};
  Real residual{};  // |lhs(eta) - 1|
  EtaMethod method = EtaMethod::kClosedForm;
  Real disagreement{};  // |closed - bisection| when both were computed
};

struct EtaOptions {
  double eta_tol = 1e-14;     // bisection stopping width
  int max_iter = 200;
  double agree_tol = 1e-10;   // closed form vs bisection
  double arc_tol = kArcTolerance;
};

/// Left side of alpha (1+e)^2 (x+(1-x)e)(y+(1-y)e) / ((1-e)^2 (y+(1-x)e)(x+(1-y)e)).
template <class Real>
Real eta_lhs(const ScaledPoint<Real>& p, const Real& alpha, const Real& eta) {
  const Real x = p.x, y = p.y;
  const Real num = (1 + eta) * (1 + eta) * (x + (1 - x) * eta) * (y + (1 - y) * eta);
  const Real den = (1 - eta) * (1 - eta) * (y + (1 - x) * eta) * (x + (1 - y) * eta);
  return alpha * num / den;
}

template <class Real>
Real eta_equation_residual(const ScaledPoint<Real>& p, const Real& alpha, const Real& eta) {
  using std::abs;
  return abs(eta_lhs(p, alpha, eta) - 1);
}

template <class Real>
struct AlphaOfEta {
  Real alpha;
  Real one_minus_alpha;
};

template <class Real>
AlphaOfEta<Real> alpha_of_eta(const ScaledPoint<Real>& p, const Real& eta) {
  const Real x = p.x, y = p.y;
  const Real a = x + (1 - x) * eta, b = y + (1 - y) * eta;
  const Real c = y + (1 - x) * eta, d = x + (1 - y) * eta;
  const Real e = x + y + (2 - x - y) * eta;
  const Real den = (1 + eta) * (1 + eta) * a * b;
  return {(1 - eta) * (1 - eta) * c * d / den, eta * e * e / den};
}

namespace detail_eta {

template <class Real>
void check_preconditions(const ScaledPoint<Real>& p, const Real& alpha, const EtaOptions& opt) {
  require(alpha > 0 && alpha < 1, ErrorCode::kInvalidArgument, "alpha must lie in (0,1)");
  require(p.y > 0, ErrorCode::kBoundaryDegenerate, "eta undefined at y = 0");
  require(classify_point(p, alpha, Real(opt.arc_tol)) != RegionTag::kDI,
          ErrorCode::kNoRootInUnitInterval, "point lies in D_I");
}

}  // namespace detail_eta

/// Bisection on g(e) = log lhs(e), which runs from log(alpha) < 0 at e = 0
/// to +inf at e = 1.
template <class Real>
Real eta_bisect(const ScaledPoint<Real>& p, const Real& alpha, const EtaOptions& opt = {}) {
  Real lo(0), hi(1);
  for (int i = 0; i < opt.max_iter && hi - lo > Real(opt.eta_tol); ++i) {
    const Real mid = (lo + hi) / 2;
    if (eta_lhs(p, alpha, mid) < 1)
      lo = mid;
    else
      hi = mid;
  }
  require(hi < 1, ErrorCode::kNoRootInUnitInterval, "bisection did not bracket a root");
  return (lo + hi) / 2;
}

template <class Real>
detail::QuarticRoots<Real> eta_quartic(const ScaledPoint<Real>& p, const Real& alpha) {
  using std::sqrt;
  // A = sqrt(a) N-/N+ and B = sqrt(1-a) Q/N+ with N+ = 1/y.
  const Real A = sqrt(alpha) * (1 - p.x - p.y);
  const Real B = sqrt(1 - alpha) * (p.x - p.y);
  return detail::eta_quartic_roots(A, B, alpha, Real(1 - alpha));
}

/// Closed-form root. All four sign patterns are evaluated and the one inside
/// the unit interval with the smallest residual is taken; it must be the
/// prescribed (+,-) pattern.
template <class Real>
Real eta_closed_form(const ScaledPoint<Real>& p, const Real& alpha, const EtaOptions& opt = {}) {
  using std::abs;
  const auto roots = eta_quartic(p, alpha);
  int best = -1;
  Real best_res{};
  for (int i = 0; i < 4; ++i) {
    const auto& br = roots.branches[static_cast<size_t>(i)];
    if (!br.in_unit_interval) continue;
    const Real res = eta_equation_residual(p, alpha, br.eta);
    if (best < 0 || res < best_res) {
      best = i;
      best_res = res;
    }
  }
  require(best >= 0, ErrorCode::kNoRootInUnitInterval, "no closed-form branch in [0,1]");
  const auto& pres = roots.prescribed();
  require(pres.in_unit_interval, ErrorCode::kBranchMismatch, "(+,-) branch left [0,1]");
  require(best == detail::QuarticRoots<Real>::kPrescribed ||
              abs(roots.branches[static_cast<size_t>(best)].eta - pres.eta) <= Real(opt.agree_tol),
          ErrorCode::kBranchMismatch, "minimal-residual branch is not (+,-)");
  return pres.eta;
}

template <class Real>
EtaRoot<Real> eta_root(const ScaledPoint<Real>& p, const Real& alpha,
                       EtaMethod method = EtaMethod::kClosedForm, const EtaOptions& opt = {}) {
  using std::abs;
  detail_eta::check_preconditions(p, alpha, opt);
  EtaRoot<Real> out;
  out.method = method;
  switch (method) {
    case EtaMethod::kClosedForm:
      out.eta = eta_closed_form(p, alpha, opt);
      break;
    case EtaMethod::kBisection:
      out.eta = eta_bisect(p, alpha, opt);
      break;
    case EtaMethod::kBoth: {
      out.eta = eta_closed_form(p, alpha, opt);
      out.disagreement = abs(out.eta - eta_bisect(p, alpha, opt));
      require(out.disagreement <= Real(10 * opt.agree_tol), ErrorCode::kMethodDisagreement,
              "closed form and bisection differ");
      break;
    }
  }
  out.residual = eta_equation_residual(p, alpha, out.eta);
  return out;
}

}  // namespace lshape::asympt
