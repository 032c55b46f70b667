#include "lshape/harness/moments.hpp"

#include <cmath>

#include "lshape/exact/efp.hpp"

namespace lshape::harness {

MomentCheck moment_derivative_check(double R, double Q, const Rational& alpha, int s,
                                    const Rational& dalpha) {
  require(s >= 1, ErrorCode::kInvalidArgument, "s must be >= 1");
  require(dalpha > 0 && alpha - dalpha > 0 && alpha + dalpha < 1, ErrorCode::kInvalidArgument,
          "alpha +- dalpha must stay in (0,1)");
  MomentCheck m;
  m.R = R;
  m.Q = Q;
  m.alpha = alpha;
  m.dalpha = dalpha;
  const int r = static_cast<int>(std::lround(R * s));
  const int q = static_cast<int>(std::lround(Q * s));
  m.dims = exact::LshapeDims::make(r, s, q);
  require(s <= r, ErrorCode::kSExceedsR, "need s <= r");

  const Rational lo = alpha - dalpha, hi = alpha + dalpha;
  const double d_log_i = exact::log_coulomb_integral(m.dims, hi) - exact::log_coulomb_integral(m.dims, lo);
  const double d_log_a = log_positive(hi) - log_positive(lo);
  m.lhs = d_log_i / (static_cast<double>(s) * s * d_log_a);

  // The gas is set up at the realized ratios, not the requested ones.
  const auto g = eqmeasure::GasParams<double>::make(static_cast<double>(r) / s, static_cast<double>(q) / s,
                                                   alpha.convert_to<double>());
  const auto sol = eqmeasure::endpoints(g);
  m.regime = sol.regime;
  m.rhs = eqmeasure::first_moment(sol, g);
  m.rel_deviation = std::abs(m.lhs - m.rhs) / std::abs(m.rhs);
  return m;
}

}  // namespace lshape::harness
