#pragma once

#include <array>
#include <string>

#include "lshape/error.hpp"
#include "lshape/scalar.hpp"

namespace lshape::exact {

/// Geometry of the L-shaped domain: an N x N lattice with an s x (s+q)
/// corner removed, r = N - s - q columns left on the right.
struct LshapeDims {
  int r = 1;
  int s = 0;
  int q = 0;

  constexpr int n() const { return r + s + q; }

  static LshapeDims make(int r, int s, int q) {
    require(r >= 1, ErrorCode::kInvalidArgument, "r must be >= 1");
    require(s >= 0, ErrorCode::kInvalidArgument, "s must be >= 0");
    require(q >= 0, ErrorCode::kInvalidArgument, "q must be >= 0");
    return LshapeDims{r, s, q};
  }

  friend bool operator==(const LshapeDims&, const LshapeDims&) = default;
};

template <class Real>
struct BoltzmannWeights {
  std::array<Real, 6> w;  // w[0] = w1, ..., w[5] = w6

  const Real& operator[](int i) const { return w[static_cast<size_t>(i - 1)]; }

  /// w1 w2 + w3 w4 - w5 w6; zero at the free-fermion point.
  Real free_fermion_defect() const {
    return (*this)[1] * (*this)[2] + (*this)[3] * (*this)[4] - (*this)[5] * (*this)[6];
  }
};

/// Bias alpha in [0,1] and normalization rho > 0, both exact.
struct ModelParams {
  Rational alpha{1, 2};
  Rational rho{2};

  static ModelParams make(const Rational& alpha, const Rational& rho) {
    require(alpha >= 0 && alpha <= 1, ErrorCode::kInvalidArgument,
            "alpha must lie in [0,1]");
    require(rho > 0, ErrorCode::kInvalidArgument, "rho must be positive");
    return ModelParams{alpha, rho};
  }

  template <class Real>
  BoltzmannWeights<Real> weights() const {
    using std::sqrt;
    const Real a = convert<Real>(alpha);
    const Real p = convert<Real>(rho);
    const Real w12 = sqrt(p * (1 - a));
    const Real w34 = sqrt(p * a);
    return {{w12, w12, w34, w34, Real(1), p}};
  }
};

}  // namespace lshape::exact
