#include "lshape/exact/efp.hpp"

#include <cmath>

namespace lshape::exact {

namespace {

Integer ipow(const Integer& base, long exponent) {
  Integer result(1);
  for (long i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rational rpow(const Rational& base, long exponent) {
  return Rational(ipow(numerator(base), exponent), ipow(denominator(base), exponent));
}

void check_alpha(const Rational& alpha) {
  require(alpha >= 0 && alpha <= 1, ErrorCode::kInvalidArgument, "alpha must lie in [0,1]");
}

}  // namespace

Rational meixner_weight(int m, int q, const Rational& alpha) {
  require(m >= 0 && q >= 0, ErrorCode::kInvalidArgument, "m, q must be >= 0");
  FactorialTable table;
  return Rational(table.binomial(q + m, q)) * rpow(alpha, m);
}

Matrix<Integer> scaled_hankel_matrix(const LshapeDims& dims, const Integer& p, const Integer& d) {
  require(dims.s >= 1, ErrorCode::kInvalidArgument, "hankel_matrix needs s >= 1");
  const int moments = 2 * dims.s - 1;
  std::vector<Integer> mu(static_cast<size_t>(moments), Integer(0));
  // p^m d^{r-1-m}, built from both ends so no division is needed.
  std::vector<Integer> dpow(static_cast<size_t>(dims.r), Integer(1));
  for (int m = 1; m < dims.r; ++m) dpow[static_cast<size_t>(m)] = dpow[static_cast<size_t>(m - 1)] * d;
  Integer binom(1);
  Integer ppow(1);
  for (int m = 0; m < dims.r; ++m) {
    if (m > 0) {
      binom = binom * (m + dims.q) / m;
      ppow *= p;
    }
    Integer term = binom * ppow * dpow[static_cast<size_t>(dims.r - 1 - m)];
    for (int k = 0; k < moments; ++k) {
      mu[static_cast<size_t>(k)] += term;
      term *= m;
    }
  }
  Matrix<Integer> h(dims.s, dims.s);
  for (int j = 0; j < dims.s; ++j)
    for (int k = 0; k < dims.s; ++k) h(j, k) = mu[static_cast<size_t>(j + k)];
  return h;
}

Rational hankel_determinant(const LshapeDims& dims, const Rational& alpha) {
  if (dims.s == 0) return Rational(1);
  const Integer d = denominator(alpha);
  const Integer det = bareiss_determinant(scaled_hankel_matrix(dims, numerator(alpha), d));
  return Rational(det, ipow(d, static_cast<long>(dims.r - 1) * dims.s));
}

Rational efp_prefactor(const LshapeDims& dims, FactorialTable& table) {
  Integer num(1), den(1);
  for (int k = 0; k < dims.s; ++k) {
    num *= table.factorial(dims.q);
    den *= table.factorial(dims.q + k) * table.factorial(k);
  }
  return Rational(num, den);
}

Rational efp_hankel(const LshapeDims& dims, const Rational& alpha, AlphaZero policy) {
  check_alpha(alpha);
  const int s = dims.s;
  if (s == 0) return Rational(1);
  if (alpha == 1) return Rational(0);
  if (alpha == 0) {
    require(!(policy == AlphaZero::kStrict && s >= 2), ErrorCode::kDegenerateAlpha,
            "alpha = 0 with s >= 2 in strict mode");
    // With s > r the moment matrix has rank r < s and F vanishes identically.
    return Rational(s <= dims.r ? 1 : 0);
  }
  FactorialTable table;
  const long drop = static_cast<long>(s) * (s - 1) / 2;
  return efp_prefactor(dims, table) * rpow(1 - alpha, static_cast<long>(s) * (s + dims.q)) /
         rpow(alpha, drop) * hankel_determinant(dims, alpha);
}

double log_efp(const LshapeDims& dims, const Rational& alpha) {
  check_alpha(alpha);
  const int s = dims.s;
  if (s == 0) return 0.0;
  require(alpha > 0 && alpha < 1, ErrorCode::kDegenerateAlpha, "log F needs 0 < alpha < 1");
  const Integer p = numerator(alpha), d = denominator(alpha);
  const Integer det = bareiss_determinant(scaled_hankel_matrix(dims, p, d));
  require(det > 0, ErrorCode::kDegenerateAlpha, "F = 0 (s > r)");
  FactorialTable table;
  const Rational pref = efp_prefactor(dims, table);
  const double log_d = log_abs(d);
  return log_positive(pref) +
         static_cast<double>(s) * (s + dims.q) * (log_abs(d - p) - log_d) +
         static_cast<double>(s) * (s - 1) / 2 * (log_d - log_abs(p)) + log_abs(det) -
         static_cast<double>(dims.r - 1) * s * log_d;
}

double log_coulomb_integral(const LshapeDims& dims, const Rational& alpha) {
  if (dims.s == 0) return 0.0;
  const double s = dims.s;
  return log_efp(dims, alpha) - s * (s + dims.q) * log_positive(1 - alpha) +
         s * (s - 1) / 2 * log_positive(alpha);
}

Integer hahn_gram_product(const LshapeDims& dims) {
  require(dims.s <= dims.r, ErrorCode::kSExceedsR, "Hahn product needs s <= r");
  FactorialTable t;
  const int q = dims.q, r = dims.r;
  Rational product(1);
  for (int j = 0; j < dims.s; ++j) {
    const Integer top = t.factorial(j) * t.factorial(j + q);
    product *= Rational(top * top * t.factorial(j + q + r),
                        t.factorial(q) * t.factorial(r - j - 1) * t.factorial(2 * j + q) *
                            t.factorial(2 * j + q + 1));
  }
  require(denominator(product) == 1, ErrorCode::kInvalidArgument, "Hahn product not integral");
  return numerator(product);
}

Rational alpha1_coefficient(const LshapeDims& dims) {
  FactorialTable table;
  return efp_prefactor(dims, table) * Rational(hahn_gram_product(dims));
}

}  // namespace lshape::exact
