#pragma once

// Trigonometric solution of A/cos(w) + B/sin(w) = 1 written as the quartic
// x^4 - 2Bx^3 - (1-A^2-B^2)x^2 + 2Bx - B^2 = 0 in x = sin(w), shared by the
// (x, y) and (R, Q) parametrizations of the eta equation.

#include <array>
#include <cmath>

#include "lshape/error.hpp"
#include "lshape/scalar.hpp"

namespace lshape::detail {

template <class Real>
struct QuarticBranch {
  int sign2 = 1;  // sign in front of the second square root
  int sign3 = 1;  // sign in front of the third square root
  Real sin_omega{};
  Real eta{};
  bool in_unit_interval = false;  // both sin(w) and eta lie in [0,1]
};

template <class Real>
struct QuarticRoots {
  // Order: (+,+), (+,-), (-,+), (-,-). The physical root is (+,-).
  std::array<QuarticBranch<Real>, 4> branches;
  static constexpr int kPrescribed = 1;
  const QuarticBranch<Real>& prescribed() const { return branches[kPrescribed]; }
};

/// All four sign choices of the trigonometric root formula. `one_minus_alpha`
/// is passed separately so eta = ((1-alpha) - x^2)/(cos w + sqrt(alpha))^2
/// keeps full relative accuracy when eta is small.
template <class Real>
QuarticRoots<Real> eta_quartic_roots(const Real& A, const Real& B, const Real& alpha,
                                     const Real& one_minus_alpha) {
  using std::asin;
  using std::sin;
  using std::sqrt;
  const Real S = (1 - A * A - B * B) / 3;
  require(S > 0, ErrorCode::kNoEtaRoot, "S = (1 - A^2 - B^2)/3 must be positive");
  Real u = A * B / (S * sqrt(S));
  require(u <= 1 + Real(1e-12), ErrorCode::kNoEtaRoot, "arccos argument outside [-1,1]");
  if (u > 1) u = 1;
  // theta = arccos(1 - 2A^2B^2/S^3) = 2 asin(AB/S^{3/2}), accurate for small AB.
  const Real theta = 2 * asin(u);
  const Real two_pi = 2 * pi<Real>();
  const Real c1 = sin(theta / 6), c2 = sin((theta + two_pi) / 6), c3 = sin((theta - two_pi) / 6);
  const Real t1 = sqrt(B * B + 4 * S * c1 * c1);
  const Real t2 = sqrt(B * B + 4 * S * c2 * c2);
  const Real t3 = sqrt(B * B + 4 * S * c3 * c3);
  // t2 - t3 without cancellation: t2^2 - t3^2 = 2 sqrt(3) S sin(theta/3).
  const Real d23 = 2 * sqrt(Real(3)) * S * sin(theta / 3) / (t2 + t3);
  const Real sqrt_alpha = sqrt(alpha);

  QuarticRoots<Real> out;
  const int signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (int i = 0; i < 4; ++i) {
    auto& br = out.branches[static_cast<size_t>(i)];
    br.sign2 = signs[i][0];
    br.sign3 = signs[i][1];
    Real tail;
    if (br.sign2 == br.sign3)
      tail = br.sign2 * (t2 + t3);
    else
      tail = br.sign2 * d23;
    br.sin_omega = B / 2 + (t1 + tail) / 2;
    if (br.sin_omega < 0 || br.sin_omega > 1) continue;
    const Real cos_omega = sqrt(1 - br.sin_omega * br.sin_omega);
    const Real denom = cos_omega + sqrt_alpha;
    br.eta = (one_minus_alpha - br.sin_omega * br.sin_omega) / (denom * denom);
    br.in_unit_interval = br.eta >= 0 && br.eta <= 1;
  }
  return out;
}

}  // namespace lshape::detail
