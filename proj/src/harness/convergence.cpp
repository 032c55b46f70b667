#include "lshape/harness/convergence.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "lshape/exact/efp.hpp"
#include "lshape/harness/parallel.hpp"

namespace lshape::harness {

namespace {

int to_int(double v, Rounding rounding) {
  // The 1e-9 nudge keeps grid points such as 0.3 * 40 from rounding down.
  return rounding == Rounding::kNearest ? static_cast<int>(std::lround(v))
                                        : static_cast<int>(std::floor(v + 1e-9));
}

double asymptotic_phi(double x, double y, double alpha) {
  const auto p = asympt::ScaledPoint<double>::make(x, y);
  return asympt::varphi(p, alpha);
}

}  // namespace

exact::LshapeDims scaled_dims(double x, double y, int n, Rounding rounding) {
  require(n >= 1, ErrorCode::kInvalidArgument, "N must be >= 1");
  const int s = to_int(y * n, rounding);
  const int sq = to_int(x * n, rounding);
  require(s >= 0 && sq >= s && sq < n, ErrorCode::kInvalidArgument,
          "rounded corner leaves no r >= 1 columns");
  return exact::LshapeDims::make(n - sq, s, sq - s);
}

ConvergenceRow finite_size_phi(double x, double y, const Rational& alpha, int n,
                               const FiniteSizeOptions& opt) {
  require(n <= opt.n_max, ErrorCode::kInvalidArgument, "N exceeds n_max");
  require(alpha > 0 && alpha < 1, ErrorCode::kDegenerateAlpha, "alpha must lie in (0,1)");
  ConvergenceRow row;
  row.n = n;
  row.dims = scaled_dims(x, y, n, opt.rounding);
  require(row.dims.s <= row.dims.r, ErrorCode::kSExceedsR, "F vanishes for s > r");
  double log_f = 0;
  if (n <= opt.exact_n_max) {
    log_f = exact::log_efp(row.dims, alpha);
  } else {
    row.exact_path = false;
    const unsigned bits = opt.precision_bits ? opt.precision_bits : default_precision_bits(n);
    log_f = dispatch_precision(bits, [&](auto tag) {
      using Real = decltype(tag);
      const Real a = convert<Real>(numerator(alpha)) / convert<Real>(denominator(alpha));
      return static_cast<double>(exact::log_efp_real<Real>(row.dims, a));
    });
  }
  row.phi_n = -log_f / (static_cast<double>(n) * n);
  row.gap = row.phi_n - asymptotic_phi(x, y, alpha.convert_to<double>());
  return row;
}

ConvergenceScan convergence_scan(double x, double y, const Rational& alpha, const std::vector<int>& ns,
                                 const FiniteSizeOptions& opt, int jobs) {
  require(!ns.empty(), ErrorCode::kInvalidArgument, "need at least one N");
  ConvergenceScan scan;
  scan.x = x;
  scan.y = y;
  scan.alpha = alpha;
  const double a = alpha.convert_to<double>();
  const auto p = asympt::ScaledPoint<double>::make(x, y);
  scan.region = asympt::classify_point(p, a);
  scan.phi = asympt::varphi(p, a);

  scan.rows.resize(ns.size());
  parallel_for(ns.size(), jobs, [&](std::size_t i) { scan.rows[i] = finite_size_phi(x, y, alpha, ns[i], opt); });

  scan.gaps_decreasing = true;
  for (std::size_t i = 1; i < scan.rows.size(); ++i)
    if (std::abs(scan.rows[i].gap) >= std::abs(scan.rows[i - 1].gap)) scan.gaps_decreasing = false;

  // phi_N = phi_inf + c1 / N + c2 log N / N^2, least squares over the rows.
  const int m = static_cast<int>(ns.size());
  const int k = std::min(m, 3);
  Eigen::MatrixXd A(m, k);
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    const double nn = scan.rows[i].n;
    A(i, 0) = 1;
    if (k > 1) A(i, 1) = 1 / nn;
    if (k > 2) A(i, 2) = std::log(nn) / (nn * nn);
    b(i) = scan.rows[i].phi_n;
  }
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
  scan.extrapolation = c(0);
  scan.c1 = k > 1 ? c(1) : 0;
  scan.c2 = k > 2 ? c(2) : 0;
  scan.abs_deviation = std::abs(scan.extrapolation - scan.phi);
  scan.rel_deviation = scan.phi != 0 ? scan.abs_deviation / std::abs(scan.phi) : 0;
  return scan;
}

std::vector<AdjudicationPoint> default_adjudication_points() {
  return {
      {0.25, 0.25, Rational(1, 2)},     {0.375, 0.25, Rational(1, 2)},
      {0.5, 0.125, Rational(3, 5)},     {0.3125, 0.1875, Rational(1, 2)},
      {0.4375, 0.0625, Rational(2, 3)}, {0.25, 0.125, Rational(3, 4)},
  };
}

PrefactorAdjudication adjudicate_prefactor(const std::vector<AdjudicationPoint>& points,
                                           const std::vector<int>& ns, int jobs) {
  using asympt::RatePrefactor;
  PrefactorAdjudication out;
  out.points.resize(points.size());
  parallel_for(points.size(), jobs, [&](std::size_t i) {
    const auto& pt = points[i];
    const auto scan = convergence_scan(pt.x, pt.y, pt.alpha, ns);
    const auto p = asympt::ScaledPoint<double>::make(pt.x, pt.y);
    const double a = pt.alpha.convert_to<double>();
    PrefactorPoint r;
    r.x = pt.x;
    r.y = pt.y;
    r.alpha = pt.alpha;
    r.extrapolation = scan.extrapolation;
    r.phi_unit = asympt::varphi_from_Phi(p, a, RatePrefactor::kUnit);
    r.phi_one_minus_x2 = asympt::varphi_from_Phi(p, a, RatePrefactor::kOneMinusXSquared);
    r.dev_unit = std::abs(scan.extrapolation - r.phi_unit) / std::abs(r.phi_unit);
    r.dev_one_minus_x2 = std::abs(scan.extrapolation - r.phi_one_minus_x2) / std::abs(r.phi_one_minus_x2);
    r.winner = r.dev_unit <= r.dev_one_minus_x2 ? RatePrefactor::kUnit
                                                : RatePrefactor::kOneMinusXSquared;
    out.points[i] = r;
  });
  out.consistent = !out.points.empty();
  if (out.consistent) out.winner = out.points.front().winner;
  for (const auto& r : out.points)
    if (r.winner != out.winner) out.consistent = false;
  return out;
}

}  // namespace lshape::harness
