#pragma once

#include <cmath>
#include <utility>

#include "lshape/error.hpp"
#include "lshape/exact/combinatorics.hpp"
#include "lshape/exact/determinant.hpp"
#include "lshape/exact/dims.hpp"
#include "lshape/scalar.hpp"

namespace lshape::exact {

/// How `efp_hankel` treats alpha = 0, where the prefactor alpha^{-s(s-1)/2}
/// is singular but F itself extends to the polynomial value 1.
enum class AlphaZero { kLimit, kStrict };

/// C(q+m, q) alpha^m.
Rational meixner_weight(int m, int q, const Rational& alpha);

/// s x s moment matrix M[j][k] = sum_{m<r} m^{j+k} w(m) (0-based j, k) with
/// 0^0 = 1. Works for any scalar that can be built from an int.
template <class Scalar>
Matrix<Scalar> hankel_matrix(const LshapeDims& dims, const Scalar& alpha) {
  require(dims.s >= 1, ErrorCode::kInvalidArgument, "hankel_matrix needs s >= 1");
  const int moments = 2 * dims.s - 1;
  std::vector<Scalar> mu(static_cast<size_t>(moments), Scalar(0));
  Scalar weight(1);
  for (int m = 0; m < dims.r; ++m) {
    if (m > 0) weight = weight * Scalar(m + dims.q) / Scalar(m) * alpha;
    Scalar term = weight;
    for (int k = 0; k < moments; ++k) {
      mu[static_cast<size_t>(k)] += term;
      term *= Scalar(m);
    }
  }
  Matrix<Scalar> h(dims.s, dims.s);
  for (int j = 0; j < dims.s; ++j)
    for (int k = 0; k < dims.s; ++k) h(j, k) = mu[static_cast<size_t>(j + k)];
  return h;
}

/// Integer moment matrix for alpha = p/d, scaled by d^{r-1} so every entry
/// is sum_m m^{j+k} C(m+q,m) p^m d^{r-1-m}.
Matrix<Integer> scaled_hankel_matrix(const LshapeDims& dims, const Integer& p, const Integer& d);

/// det of the moment matrix, exactly (1 when s = 0).
Rational hankel_determinant(const LshapeDims& dims, const Rational& alpha);

/// (q!)^s / prod_{k<s} (q+k)! k!
Rational efp_prefactor(const LshapeDims& dims, FactorialTable& table);

/// Emptiness formation probability F_{r,s,q}(alpha), exact.
Rational efp_hankel(const LshapeDims& dims, const Rational& alpha,
                    AlphaZero policy = AlphaZero::kLimit);

/// log F computed from exact integer pieces without forming F; the result is
/// a double but every intermediate is exact. Requires 0 < alpha < 1 or s = 0.
double log_efp(const LshapeDims& dims, const Rational& alpha);

/// log I_{r,s,q}(alpha) = log F - s(s+q) log(1-alpha) + s(s-1)/2 log(alpha).
double log_coulomb_integral(const LshapeDims& dims, const Rational& alpha);

struct CoulombSum {
  Rational integral;  // I_{r,s,q}
  Rational efp;       // F_{r,s,q}
};

/// Brute-force Coulomb-gas sum over charge positions; cross-validation only.
CoulombSum coulomb_sum_oracle(const LshapeDims& dims, const Rational& alpha, int s_max = 4);

/// Closed product for the alpha = 1 moment determinant.
Integer hahn_gram_product(const LshapeDims& dims);

/// Leading coefficient of F / (1-alpha)^{s(s+q)} as alpha -> 1.
Rational alpha1_coefficient(const LshapeDims& dims);

/// Real path: log F by LU on the moment matrix in the scalar `Real`.
/// Intended for MPFR types; the Hankel matrix is badly conditioned, so the
/// precision has to grow with s.
template <class Real>
Real log_efp_real(const LshapeDims& dims, const Real& alpha) {
  using std::lgamma;
  using std::log;
  if (dims.s == 0) return Real(0);
  require(alpha > 0 && alpha < 1, ErrorCode::kDegenerateAlpha,
          "real path needs 0 < alpha < 1");
  const int s = dims.s, q = dims.q;
  Real log_pref(0);
  for (int k = 0; k < s; ++k)
    log_pref += lgamma(Real(q + 1)) - lgamma(Real(q + k + 1)) - lgamma(Real(k + 1));
  const Real det = lu_determinant(hankel_matrix<Real>(dims, alpha));
  require(det > 0, ErrorCode::kDegenerateAlpha,
          "moment determinant not positive (s > r or precision too low)");
  return log_pref + Real(s) * Real(s + q) * log(1 - alpha) -
         Real(s) * Real(s - 1) / 2 * log(alpha) + log(det);
}

template <class Real>
Real efp_real(const LshapeDims& dims, const Real& alpha) {
  using std::exp;
  return exp(log_efp_real(dims, alpha));
}

/// Z_N = w5^{N(N-1)/2} w6^{N(N+1)/2} = rho^{N(N+1)/2}.
template <class Real>
Real partition_square(int n, const ModelParams& params) {
  using std::pow;
  require(n >= 1, ErrorCode::kInvalidArgument, "N must be >= 1");
  const auto w = params.weights<Real>();
  const Real nn(n);
  return pow(w[5], nn * (nn - 1) / 2) * pow(w[6], nn * (nn + 1) / 2);
}

/// Z_{r,s,q} = Z_N F / w2^{s(s+q)}.
template <class Real>
Real partition_lshape(const LshapeDims& dims, const ModelParams& params) {
  using std::pow;
  const Real z = partition_square<Real>(dims.n(), params);
  if (dims.s == 0) return z;
  require(params.alpha < 1, ErrorCode::kDegenerateAlpha,
          "w2 vanishes at alpha = 1 with s >= 1");
  const Real f = convert<Real>(efp_hankel(dims, params.alpha));
  const auto w = params.weights<Real>();
  return z * f / pow(w[2], Real(dims.s) * Real(dims.s + dims.q));
}

}  // namespace lshape::exact
