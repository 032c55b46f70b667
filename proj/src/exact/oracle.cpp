#include <cmath>
#include <vector>

#include "lshape/exact/efp.hpp"

namespace lshape::exact {

CoulombSum coulomb_sum_oracle(const LshapeDims& dims, const Rational& alpha, int s_max) {
  const int r = dims.r, s = dims.s, q = dims.q;
  require(s <= s_max && std::pow(static_cast<double>(r), s) <= 1e7, ErrorCode::kOracleTooLarge,
          "oracle limited to s <= s_max and r^s <= 1e7");
  require(alpha >= 0 && alpha <= 1, ErrorCode::kInvalidArgument, "alpha must lie in [0,1]");
  FactorialTable table;
  std::vector<Rational> weight(static_cast<size_t>(r));
  for (int m = 0; m < r; ++m) weight[static_cast<size_t>(m)] = meixner_weight(m, q, alpha);

  // The summand is symmetric and vanishes on coincident positions, so the
  // 1/s! sum over all tuples equals the sum over strictly increasing ones.
  Rational total(0);
  std::vector<int> m(static_cast<size_t>(s));
  for (int i = 0; i < s; ++i) m[static_cast<size_t>(i)] = i;
  while (s <= r) {
    Rational term(1);
    for (int j = 0; j < s; ++j) {
      term *= weight[static_cast<size_t>(m[static_cast<size_t>(j)])];
      for (int k = j + 1; k < s; ++k) {
        const long diff = m[static_cast<size_t>(k)] - m[static_cast<size_t>(j)];
        term *= diff * diff;
      }
    }
    total += term;
    int i = s - 1;
    while (i >= 0 && m[static_cast<size_t>(i)] == r - s + i) --i;
    if (i < 0) break;
    ++m[static_cast<size_t>(i)];
    for (int j = i + 1; j < s; ++j) m[static_cast<size_t>(j)] = m[static_cast<size_t>(j - 1)] + 1;
  }
  if (s > r) total = 0;

  Rational pref(1);
  for (int j = 0; j < s; ++j)
    pref *= Rational(table.factorial(q), table.factorial(j) * table.factorial(j + q));
  const Rational integral = pref * total;

  CoulombSum out{integral, Rational(0)};
  if (s == 0) {
    out.efp = 1;
  } else if (alpha == 0) {
    // Lowest order in alpha: only {0..s-1} survives, carrying alpha^{s(s-1)/2}.
    Rational lead = pref;
    for (int j = 0; j < s && j < r; ++j) {
      lead *= Rational(table.binomial(q + j, q));
      for (int k = j + 1; k < s; ++k) lead *= static_cast<long>(k - j) * (k - j);
    }
    out.efp = s <= r ? lead : Rational(0);
  } else {
    Rational f = integral;
    for (long i = 0; i < static_cast<long>(s) * (s + q); ++i) f *= 1 - alpha;
    for (long i = 0; i < static_cast<long>(s) * (s - 1) / 2; ++i) f /= alpha;
    out.efp = f;
  }
  return out;
}

}  // namespace lshape::exact
