#include "lshape/harness/transition.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace lshape::harness {

namespace {

std::vector<double> offsets(double lo, double hi, int n, Spacing spacing) {
  require(n >= 3, ErrorCode::kInvalidArgument, "need at least three samples");
  require(lo > 0 && hi > lo, ErrorCode::kWindowBelowCritical, "window must lie above alpha_c");
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    d[i] = spacing == Spacing::kGeometric ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  return d;
}

void fit(TransitionFit& f) {
  const int n = static_cast<int>(f.samples.size());
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) {
    require(f.samples[i].phi > 0, ErrorCode::kLogDomain, "phi not positive inside the window");
    A(i, 0) = 1;
    A(i, 1) = std::log(f.samples[i].offset);
    b(i) = std::log(f.samples[i].phi);
  }
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
  f.exponent = c(1);
  const Eigen::VectorXd res = b - A * c;
  const double ss_tot = (b.array() - b.mean()).square().sum();
  f.r_squared = ss_tot > 0 ? 1 - res.squaredNorm() / ss_tot : 1;

  // phi / d^3 = K + K1 d + K2 d^2; K is the cubic prefactor.
  Eigen::MatrixXd B(n, 3);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) {
    const double d = f.samples[i].offset;
    B(i, 0) = 1;
    B(i, 1) = d;
    B(i, 2) = d * d;
    v(i) = f.samples[i].phi / (d * d * d);
  }
  f.cubic_prefactor = B.colPivHouseholderQr().solve(v)(0);
  f.amplitude = 6 * f.cubic_prefactor;
}

}  // namespace

TransitionFit transition_fit(double x, double y, double offset_lo, double offset_hi, int n,
                             Spacing spacing) {
  const auto p = asympt::ScaledPoint<double>::make(x, y);
  TransitionFit f;
  f.x = x;
  f.y = y;
  f.alpha_c = asympt::alpha_c(p);
  for (double d : offsets(offset_lo, offset_hi, n, spacing)) {
    const double a = f.alpha_c + d;
    require(a < 1, ErrorCode::kInvalidArgument, "window leaves (0,1)");
    f.samples.push_back({a, d, asympt::varphi(p, a)});
  }
  fit(f);
  f.c_formula = asympt::cubic_coeff_C(p);
  f.c_fd = cubic_coeff_fd(x, y);
  return f;
}

TransitionFit transition_fit_normal(double phi_angle, double lambda, double offset_lo,
                                    double offset_hi, int n) {
  const auto arc = asympt::arc_param(phi_angle, lambda);
  const auto base = arc.point;
  const auto [nx, ny] = asympt::arc_normal(base);
  const double alpha = arc.alpha;
  TransitionFit f;
  f.x = base.x;
  f.y = base.y;
  f.alpha_c = alpha;
  for (double d : offsets(offset_lo, offset_hi, n, Spacing::kGeometric)) {
    const auto p = asympt::ScaledPoint<double>::make(base.x + d * nx, base.y + d * ny);
    f.samples.push_back({alpha, d, asympt::varphi(p, alpha)});
  }
  fit(f);
  // Along the normal phi ~ (C/6) (g d)^3 with g = |grad alpha_c|.
  const double delta = 1e-6;
  const double g = (asympt::alpha_c(asympt::ScaledPoint<double>{base.x - delta * nx, base.y - delta * ny}) -
                    asympt::alpha_c(asympt::ScaledPoint<double>{base.x + delta * nx, base.y + delta * ny})) /
                   (2 * delta);
  f.c_formula = asympt::cubic_coeff_C(base) * g * g * g;
  f.c_fd = cubic_coeff_fd(base.x, base.y) * g * g * g;
  return f;
}

double cubic_coeff_fd(double x, double y, double h) {
  const auto p = asympt::ScaledPoint<Quad>::make(Quad(x), Quad(y));
  const Quad ac = asympt::alpha_c(p);
  auto phi = [&](const Quad& d) { return d <= 0 ? Quad(0) : asympt::varphi(p, ac + d); };
  auto d3 = [&](const Quad& step) {
    return (phi(3 * step) - 3 * phi(2 * step) + 3 * phi(step) - phi(Quad(0))) / (step * step * step);
  };
  const Quad hq(h);
  return static_cast<double>(2 * d3(hq / 2) - d3(hq));
}

}  // namespace lshape::harness
