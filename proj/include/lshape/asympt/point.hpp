#pragma once

#include <cmath>
#include <string_view>

#include "lshape/error.hpp"
#include "lshape/scalar.hpp"

namespace lshape::asympt {

enum class RegionTag { kDI, kDII, kOnArc };

constexpr std::string_view to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::kDI: return "D_I";
    case RegionTag::kDII: return "D_II";
    case RegionTag::kOnArc: return "ON_ARC";
  }
  return "?";
}

inline constexpr double kArcTolerance = 1e-12;

/// Scaled corner position: y = s/N, x = (s+q)/N, restricted to the triangle
/// 0 <= y <= x, y <= 1 - x.
template <class Real>
struct ScaledPoint {
  Real x{};
  Real y{};

  static ScaledPoint make(const Real& x, const Real& y, const Real& slack = Real(1e-13)) {
    require(y >= -slack && y <= x + slack && y <= 1 - x + slack, ErrorCode::kInvalidArgument,
            "point outside the triangle 0 <= y <= x, y <= 1 - x");
    return ScaledPoint{x, y};
  }

  /// Inverse of R = (1-x)/y, Q = (x-y)/y.
  static ScaledPoint from_gas(const Real& R, const Real& Q) {
    require(R >= 1 && Q >= 0, ErrorCode::kInvalidArgument, "need R >= 1, Q >= 0");
    const Real n = R + Q + 1;
    return ScaledPoint{(1 + Q) / n, 1 / n};
  }

  Real R() const {
    require(y > 0, ErrorCode::kBoundaryDegenerate, "R undefined at y = 0");
    return (1 - x) / y;
  }
  Real Q() const {
    require(y > 0, ErrorCode::kBoundaryDegenerate, "Q undefined at y = 0");
    return (x - y) / y;
  }
};

template <class Real>
Real h_param(const ScaledPoint<Real>& p) {
  using std::sqrt;
  require(p.x < 1 && p.y < 1, ErrorCode::kBoundaryDegenerate, "h undefined at x = 1 or y = 1");
  return sqrt(p.x * p.y / ((1 - p.x) * (1 - p.y)));
}

/// (sqrt((1-x)(1-y)) - sqrt(xy))^2, written as (1-x-y)^2 / (sum)^2 so that it
/// stays accurate near the line x + y = 1.
template <class Real>
Real alpha_c(const ScaledPoint<Real>& p) {
  using std::sqrt;
  const Real sum = sqrt((1 - p.x) * (1 - p.y)) + sqrt(p.x * p.y);
  const Real diff = 1 - p.x - p.y;
  return diff * diff / (sum * sum);
}

template <class Real>
RegionTag classify_point(const ScaledPoint<Real>& p, const Real& alpha,
                         const Real& tol = Real(kArcTolerance)) {
  const Real ac = alpha_c(p);
  if (alpha < ac - tol) return RegionTag::kDI;
  if (alpha > ac + tol) return RegionTag::kDII;
  return RegionTag::kOnArc;
}

/// Independent test against the arc sqrt(y) = sqrt((1-a)(1-x)) - sqrt(a x):
/// points strictly below the arc (and left of the contact point x = 1 - a)
/// are in D_I. No tolerance band; used as a cross-check of classify_point.
template <class Real>
RegionTag classify_by_arc(const ScaledPoint<Real>& p, const Real& alpha) {
  using std::sqrt;
  const Real yc = sqrt((1 - alpha) * (1 - p.x)) - sqrt(alpha * p.x);
  if (yc > 0 && sqrt(p.y) < yc) return RegionTag::kDI;
  if (yc > 0 && sqrt(p.y) == yc) return RegionTag::kOnArc;
  return RegionTag::kDII;
}

/// sqrt(y) - sqrt((1-x)(1-a)) + sqrt(x a); zero on the arc.
template <class Real>
Real arc_residual(const ScaledPoint<Real>& p, const Real& alpha) {
  using std::sqrt;
  return sqrt(p.y) - sqrt((1 - p.x) * (1 - alpha)) + sqrt(p.x * alpha);
}

template <class Real>
struct ArcPoint {
  ScaledPoint<Real> point;
  Real alpha;
};

/// x = cos^2((phi+lambda)/2), y = sin^2((phi-lambda)/2), alpha = sin^2(lambda).
template <class Real>
ArcPoint<Real> arc_param(const Real& phi, const Real& lambda) {
  using std::cos;
  using std::sin;
  const Real half_pi = pi<Real>() / 2;
  require(lambda > 0 && lambda < half_pi && phi >= lambda && phi <= half_pi,
          ErrorCode::kAngleOutOfRange, "need 0 < lambda < pi/2 and lambda <= phi <= pi/2");
  const Real c = cos((phi + lambda) / 2), s = sin((phi - lambda) / 2), sl = sin(lambda);
  return {ScaledPoint<Real>{c * c, s * s}, sl * sl};
}

/// Unit normal to the arc {alpha_c = alpha} at p, pointing into D_II
/// (the direction in which alpha_c decreases). Requires 0 < y, x + y < 1.
template <class Real>
std::pair<Real, Real> arc_normal(const ScaledPoint<Real>& p) {
  using std::sqrt;
  require(p.y > 0 && p.x + p.y < 1, ErrorCode::kArcDegenerate, "normal needs an interior point");
  const Real u = sqrt((1 - p.x) * (1 - p.y)), v = sqrt(p.x * p.y);
  const Real gx = (u - v) * (-(1 - p.y) / u - p.y / v);
  const Real gy = (u - v) * (-(1 - p.x) / u - p.x / v);
  const Real norm = sqrt(gx * gx + gy * gy);
  return {-gx / norm, -gy / norm};
}

}  // namespace lshape::asympt
