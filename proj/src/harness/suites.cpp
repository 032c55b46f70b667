#include "lshape/harness/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "lshape/asympt/rate.hpp"
#include "lshape/eqmeasure/density.hpp"
#include "lshape/exact/efp.hpp"
#include "lshape/harness/consistency.hpp"
#include "lshape/harness/convergence.hpp"
#include "lshape/harness/moments.hpp"
#include "lshape/harness/transition.hpp"

namespace lshape::harness {

namespace {

using asympt::RegionTag;
using P = asympt::ScaledPoint<double>;
using G = eqmeasure::GasParams<double>;

const Rational kGridAlphas[] = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3)};

P random_triangle_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double x = u(rng), y = 0.5 * u(rng);
    if (y > 0 && y <= x && y <= 1 - x) return P{x, y};
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}


// 1: efp_hankel against the brute-force Coulomb sum.
void criterion_oracle(CriterionResult& c, double) {
  int cases = 0, mismatches = 0;
  for (int r = 1; r <= 6; ++r)
    for (int s = 0; s <= 3; ++s)
      for (int q = 0; q <= 3; ++q)
        for (const auto& a : kGridAlphas) {
          const auto d = exact::LshapeDims::make(r, s, q);
          ++cases;
          if (exact::efp_hankel(d, a) != exact::coulomb_sum_oracle(d, a).efp) ++mismatches;
        }
  c.checks.push_back(make_check("efp_equals_coulomb_oracle", Json{{"cases", cases}}, mismatches, 0));
}

// 2: alpha = 0 and alpha -> 1 limits on the same grid.
void criterion_limits(CriterionResult& c, double tol_scale) {
  int zero_cases = 0, zero_bad = 0, vanishing = 0, vanishing_bad = 0, one_cases = 0;
  double worst = 0;
  const Rational near_one = 1 - Rational(1, 100000);
  for (int r = 1; r <= 6; ++r)
    for (int s = 0; s <= 3; ++s)
      for (int q = 0; q <= 3; ++q) {
        const auto d = exact::LshapeDims::make(r, s, q);
        if (s > r) {
          // Rank r < s: F vanishes for every alpha.
          for (const auto& a : kGridAlphas) {
            ++vanishing;
            if (exact::efp_hankel(d, a) != 0) ++vanishing_bad;
          }
          ++vanishing;
          if (exact::efp_hankel(d, Rational(0)) != 0) ++vanishing_bad;
          continue;
        }
        ++zero_cases;
        if (exact::efp_hankel(d, Rational(0)) != 1) ++zero_bad;
        if (s == 0) continue;
        ++one_cases;
        const Rational f = exact::efp_hankel(d, near_one);
        Rational lead = exact::alpha1_coefficient(d);
        const Rational base = 1 - near_one;
        for (int k = 0; k < s * (s + q); ++k) lead *= base;
        worst = std::max(worst, std::abs((f / lead - 1).convert_to<double>()));
      }
  c.checks.push_back(make_check("alpha0_equals_one", Json{{"cases_s_le_r", zero_cases}}, zero_bad, 0));
  c.checks.push_back(make_check("s_gt_r_vanishes", Json{{"cases", vanishing}}, vanishing_bad, 0));
  c.checks.push_back(make_check("alpha1_hahn_ratio", Json{{"alpha", "99999/100000"}, {"cases", one_cases}},
                                worst, 1e-3 * tol_scale));
}

// 3: eta solver on random D_II points and on the arc.
void criterion_eta(CriterionResult& c, double tol_scale) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_diff = 0, worst_res = 0;
  int tested = 0;
  while (tested < 1000) {
    const P p = random_triangle_point(rng);
    const double ac = asympt::alpha_c(p);
    const double a = ac + (1 - ac) * u(rng);
    if (a >= 1 || asympt::classify_point(p, a) != RegionTag::kDII) continue;
    ++tested;
    const double closed = asympt::eta_closed_form(p, a);
    const double bis = asympt::eta_bisect(p, a);
    worst_diff = std::max(worst_diff, std::abs(closed - bis));
    worst_res = std::max(worst_res, asympt::eta_equation_residual(p, a, closed));
  }
  const double tol = 1e-10 * tol_scale;
  c.checks.push_back(make_check("eta_closed_vs_bisect", Json{{"points", tested}}, worst_diff, tol));
  c.checks.push_back(make_check("eta_equation_residual", Json{{"points", tested}}, worst_res, tol));
  double worst_arc = 0;
  int arc_points = 0;
  for (int i = 1; i <= 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const double lam = 1.5 * i / 11.0;
      const double phi = lam + (M_PI / 2 - lam) * (j + 0.5) / 10.0;
      const auto ap = asympt::arc_param(phi, lam);
      if (ap.point.y <= 0) continue;
      ++arc_points;
      const double e = asympt::eta_root(ap.point, ap.alpha, asympt::EtaMethod::kClosedForm).eta;
      worst_arc = std::max(worst_arc, std::abs(e - asympt::h_param(ap.point)));
    }
  c.checks.push_back(make_check("eta_equals_h_on_arc", Json{{"points", arc_points}}, worst_arc, tol));
}

// 4: phi vanishes in D_I and on the arc, is positive in D_II; chi(h) = chi0.
void criterion_rate(CriterionResult& c, double tol_scale) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_d1 = 0;
  int n1 = 0;
  while (n1 < 1000) {
    const P p = random_triangle_point(rng);
    const double a = asympt::alpha_c(p) * u(rng);
    if (a <= 0 || asympt::classify_point(p, a) != RegionTag::kDI) continue;
    ++n1;
    worst_d1 = std::max(worst_d1, std::abs(asympt::varphi(p, a)));
  }
  c.checks.push_back(make_check("phi_zero_in_DI", Json{{"points", n1}}, worst_d1, 0));

  // On the arc the rate expression is evaluated at the computed root,
  // bypassing the region shortcut.
  double worst_arc = 0;
  int n_arc = 0;
  for (int i = 1; i <= 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const double lam = 1.5 * i / 11.0;
      const double phi = lam + (M_PI / 2 - lam) * (j + 0.5) / 10.0;
      const auto ap = asympt::arc_param(phi, lam);
      ++n_arc;
      const double e = asympt::eta_root(ap.point, ap.alpha).eta;
      worst_arc = std::max(worst_arc, std::abs(asympt::varphi_from_eta(ap.point, e)));
    }
  c.checks.push_back(make_check("phi_zero_on_arc", Json{{"points", n_arc}}, worst_arc, 1e-10 * tol_scale));

  int n2 = 0, nonpositive = 0;
  while (n2 < 1000) {
    const P p = random_triangle_point(rng);
    const double ac = asympt::alpha_c(p);
    const double a = ac + (1 - ac) * u(rng);
    if (a >= 1 || asympt::classify_point(p, a) != RegionTag::kDII) continue;
    ++n2;
    if (!(asympt::varphi(p, a) > 0)) ++nonpositive;
  }
  c.checks.push_back(make_check("phi_positive_in_DII", Json{{"points", n2}}, nonpositive, 0));

  double worst_chi = 0;
  for (int i = 0; i < 1000; ++i) {
    const P p = random_triangle_point(rng);
    worst_chi = std::max(worst_chi, std::abs(asympt::chi(p, asympt::h_param(p)) - asympt::chi0(p)));
  }
  c.checks.push_back(make_check("chi_at_h_equals_chi0", Json{{"points", 1000}}, worst_chi, 1e-12 * tol_scale));
}

// 5: end-point equations in both regimes.
void criterion_endpoints(CriterionResult& c, double tol_scale) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ua(0.05, 0.95), uq(0, 5), u(0, 1);
  double worst_one = 0;
  int n1 = 0;
  while (n1 < 200) {
    const double alpha = ua(rng), Q = uq(rng);
    const G probe{1, Q, alpha};
    const double R = probe.Rc() * (1.01 + 2 * u(rng));
    const G g = G::make(R, Q, alpha);
    eqmeasure::RegimeSolution<double> s;
    try {
      s = eqmeasure::endpoints(g);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kOnCriticalLine) continue;
      throw;
    }
    ++n1;
    worst_one = std::max(worst_one, eqmeasure::regime_one_residuals(s.a, s.b, s.nu, g).max());
  }
  c.checks.push_back(make_check("regime_one_closed_form_residual", Json{{"triples", n1}}, worst_one,
                                1e-12 * tol_scale));

  double worst_two = 0, worst_eta = 0;
  int n2 = 0;
  while (n2 < 200) {
    const double alpha = ua(rng), Q = uq(rng);
    const double rc = G{1, Q, alpha}.Rc();
    const double R = 1 + (rc - 1) * (0.02 + 0.96 * u(rng));
    const G g = G::make(R, Q, alpha);
    eqmeasure::RegimeSolution<double> s;
    try {
      s = eqmeasure::endpoints(g);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kOnCriticalLine) continue;
      throw;
    }
    ++n2;
    worst_two = std::max(worst_two, eqmeasure::regime_two_residuals(s.a, s.b, s.nu, g).max());
    worst_eta = std::max(worst_eta, std::abs(*s.eta - *s.eta_quartic_gas));
  }
  c.checks.push_back(make_check("regime_two_residual", Json{{"triples", n2}}, worst_two, 1e-10 * tol_scale));
  c.checks.push_back(make_check("regime_two_eta_quartic", Json{{"triples", n2}}, worst_eta, 1e-10 * tol_scale));
}

// 6: equilibrium measure self-consistency in all four regimes.
void criterion_measure(CriterionResult& c, double tol_scale) {
  ConsistencyOptions opt;
  opt.bound_tol *= tol_scale;
  opt.normalization_tol *= tol_scale;
  opt.moment_tol *= tol_scale;
  opt.variational_tol *= tol_scale;
  opt.large_z_tol *= tol_scale;
  for (const G& g : {G::make(10, 0, 0.5), G::make(15, 3, 0.5), G::make(4, 0, 0.5), G::make(4, 3, 0.5)}) {
    auto checks = resolvent_consistency(g, opt);
    c.checks.insert(c.checks.end(), checks.begin(), checks.end());
  }
}

// 7: cubic law at (1/4, 1/4).
void criterion_transition(CriterionResult& c, double tol_scale) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto f = transition_fit(0.25, 0.25, 1e-3, 5e-2, 40);
  const Json in{{"x", 0.25}, {"y", 0.25}, {"window", {1e-3, 5e-2}}, {"n", 40}};
  c.checks.push_back(make_check("exponent", in, std::abs(f.exponent - 3), 0.05 * tol_scale));
  c.checks.push_back(make_check("r_squared", in, 1 - f.r_squared, 1e-3 * tol_scale));
  // The finite-difference oracle regenerates C before the comparison.
  c.checks.push_back(make_check("c_fd_vs_formula", in, std::abs(f.c_fd / f.c_formula - 1), 1e-3 * tol_scale));
  c.checks.push_back(make_check("c_formula_8_3", in, std::abs(f.c_formula - 8.0 / 3), 1e-12 * tol_scale));
  c.checks.push_back(make_check("amplitude_vs_c_fd", in, std::abs(f.amplitude / f.c_fd - 1), 0.02 * tol_scale));
  const P p{0.25, 0.25};
  double below = 0;
  for (int k = 1; k <= 100; ++k) below = std::max(below, std::abs(asympt::varphi(p, f.alpha_c * k / 101.0)));
  c.checks.push_back(make_check("phi_zero_below_alpha_c", Json{{"x", 0.25}, {"y", 0.25}, {"samples", 100}}, below,
                                1e-12 * tol_scale));
  c.checks.push_back(make_check("runtime_seconds", Json::object(), seconds_since(t0), 30));
}

// 8: finite-size convergence and the prefactor adjudication.
void criterion_convergence(CriterionResult& c, double tol_scale, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<int> ns = {32, 64, 128};
  const auto scan = convergence_scan(0.25, 0.25, Rational(1, 2), ns, {}, jobs);
  const Json in{{"x", 0.25}, {"y", 0.25}, {"alpha", "1/2"}, {"Ns", ns}};
  bool all_exact = true;
  for (const auto& row : scan.rows) all_exact = all_exact && row.exact_path;
  c.checks.push_back(make_flag("exact_rational_path", in, all_exact));
  c.checks.push_back(make_flag("gaps_strictly_decreasing", in, scan.gaps_decreasing));
  c.checks.push_back(make_check("extrapolation_rel_deviation", in, scan.rel_deviation, 1e-2 * tol_scale));
  const auto adj = adjudicate_prefactor(default_adjudication_points(), ns, jobs);
  Json pts = Json::array();
  for (const auto& pt : adj.points)
    pts.push_back(Json{{"x", pt.x}, {"y", pt.y}, {"alpha", to_string(pt.alpha)},
                       {"winner", std::string(asympt::to_string(pt.winner))}});
  c.checks.push_back(make_flag("prefactor_single_winner",
                               Json{{"points", pts}, {"winner", std::string(asympt::to_string(adj.winner))}},
                               adj.consistent && adj.points.size() >= 5));
  c.checks.push_back(make_check("runtime_seconds", Json::object(), seconds_since(t0), 600));
}

// 9: moment derivative at s = 40.
void criterion_moments(CriterionResult& c, double tol_scale) {
  const auto one = moment_derivative_check(10, 0, Rational(1, 2), 40);
  c.checks.push_back(make_check("regime_one_moment",
                                Json{{"R", 10}, {"Q", 0}, {"alpha", "1/2"}, {"s", 40}, {"lhs", one.lhs}, {"E", one.rhs}},
                                one.rel_deviation, 0.02 * tol_scale));
  const auto two = moment_derivative_check(4, 0, Rational(1, 2), 40);
  c.checks.push_back(make_check("regime_two_moment",
                                Json{{"R", 4}, {"Q", 0}, {"alpha", "1/2"}, {"s", 40}, {"lhs", two.lhs}, {"E", two.rhs},
                                     {"regime", std::string(eqmeasure::to_string(two.regime))}},
                                two.rel_deviation, 0.05 * tol_scale));
  c.checks.push_back(make_flag("regime_two_is_regime_two", Json{{"R", 4}, {"Q", 0}},
                               eqmeasure::is_regime_two(two.regime)));
}

const char* kTitles[] = {
    "",
    "exact oracle equivalence",
    "alpha limits",
    "eta solver",
    "rate function zero set and sign",
    "end-point equations",
    "equilibrium measure consistency",
    "third-order transition",
    "finite-size convergence",
    "moment derivative",
};

}  // namespace

CriterionResult run_criterion(int id, double tol_scale, int jobs) {
  require(id >= 1 && id <= kCriterionCount, ErrorCode::kInvalidArgument, "criterion out of range");
  require(tol_scale > 0, ErrorCode::kInvalidArgument, "tol-scale must be positive");
  CriterionResult c;
  c.id = id;
  c.title = kTitles[id];
  const auto t0 = std::chrono::steady_clock::now();
  switch (id) {
    case 1: criterion_oracle(c, tol_scale); break;
    case 2: criterion_limits(c, tol_scale); break;
    case 3: criterion_eta(c, tol_scale); break;
    case 4: criterion_rate(c, tol_scale); break;
    case 5: criterion_endpoints(c, tol_scale); break;
    case 6: criterion_measure(c, tol_scale); break;
    case 7: criterion_transition(c, tol_scale); break;
    case 8: criterion_convergence(c, tol_scale, jobs); break;
    case 9: criterion_moments(c, tol_scale); break;
  }
  c.seconds = seconds_since(t0);
  if (id == 1) c.checks.push_back(make_check("runtime_seconds", Json::object(), c.seconds, 60));
  c.pass = all_pass(c.checks);
  return c;
}

std::vector<int> suite_criteria(std::string_view suite) {
  if (suite == "exactcore") return {1, 2};
  if (suite == "asympt") return {3, 4};
  if (suite == "eqmeasure") return {5, 6};
  if (suite == "harness") return {7, 8, 9};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9};
  throw Error(ErrorCode::kInvalidArgument, "unknown suite " + std::string(suite));
}

std::vector<CriterionResult> run_suite(std::string_view suite, double tol_scale, int jobs) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id, tol_scale, jobs));
  return out;
}

Json to_json(const CriterionResult& c) {
  Json j;
  j["criterion"] = c.id;
  j["title"] = c.title;
  j["pass"] = c.pass;
  j["seconds"] = c.seconds;
  j["checks"] = to_json(c.checks);
  return j;
}

}  // namespace lshape::harness
