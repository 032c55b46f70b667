#include "lshape/harness/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lshape::harness {

using namespace eqmeasure;

namespace {
constexpr double kQuadCriticalTol = 1e-12;
}

std::vector<CheckResult> resolvent_consistency(const GasParams<double>& gas, const ConsistencyOptions& opt) {
  const auto sol = endpoints(gas);
  const double e = first_moment(sol, gas);
  Json in;
  in["R"] = gas.R;
  in["Q"] = gas.Q;
  in["alpha"] = gas.alpha;
  in["regime"] = std::string(to_string(sol.regime));
  std::vector<CheckResult> out;

  const auto prof = profile(sol, gas, opt.iib);
  double excess = 0;
  for (int k = 0; k <= opt.bound_samples; ++k) {
    const double rho = prof(gas.R * k / opt.bound_samples);
    excess = std::max({excess, -rho, rho - 1});
  }
  out.push_back(make_check("density_bounds", in, std::max(excess, 0.0), opt.bound_tol));

  const auto m = moments(prof);
  out.push_back(make_check("normalization", in, std::abs(m.normalization - 1), opt.normalization_tol));
  out.push_back(make_check("first_moment_quadrature", in, std::abs(m.first_moment - e), opt.moment_tol));

  double r4 = 0, r6 = 0;
  for (int k = 1; k < 8; ++k) {
    const double mu = sol.a + (sol.b - sol.a) * k / 8.0;
    r4 = std::max(r4, variational_residual(mu, 1e-4, sol, gas));
    r6 = std::max(r6, variational_residual(mu, 1e-6, sol, gas));
  }
  out.push_back(make_flag("variational_decreasing", in, r6 < r4));
  out.push_back(make_check("variational_eps_1e-6", in, r6, opt.variational_tol));

  // z^2 amplifies end-point errors, so the solve is repeated in quad.
  const GasParams<Quad> gq{Quad(gas.R), Quad(gas.Q), Quad(gas.alpha)};
  const auto sq = endpoints(gq, SolveOptions{kQuadCriticalTol, 1e-20, 1e-25});
  for (double z : opt.large_z) {
    Json zin = in;
    zin["z"] = z;
    const double el = static_cast<double>(first_moment_large_z(Quad(z), sq, gq));
    out.push_back(make_check("large_z_first_moment", zin, std::abs(el - e), opt.large_z_tol));
  }
  return out;
}

}  // namespace lshape::harness
