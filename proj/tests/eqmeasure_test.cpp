#include "doctest.h"

#include <random>

#include "lshape/asympt/point.hpp"
#include "lshape/eqmeasure/density.hpp"

using namespace lshape;
using namespace lshape::eqmeasure;
using doctest::Approx;
using G = GasParams<double>;
using Cd = std::complex<double>;

namespace {

GasParams<Quad> to_quad(const G& g) { return {Quad(g.R), Quad(g.Q), Quad(g.alpha)}; }

/// Quad-precision solve, for tight comparisons.
RegimeSolution<Quad> solve_quad(const G& g) {
  return endpoints(to_quad(g), SolveOptions{1e-12, 1e-20, 1e-25});
}

}  // namespace

TEST_CASE("gas parameters and potential") {
  const auto g = G::make(10, 0, 0.5);
  CHECK(g.Qc() == Approx(1.0));
  CHECK(g.Rc() == Approx(3 + 2 * std::sqrt(2.0)));
  CHECK(G::make(15, 3, 0.5).Rc() == Approx(2 * (1 + std::sqrt(2.0)) * (1 + std::sqrt(2.0))));
  const auto g3 = G::make(15, 3, 0.5);
  CHECK(potential(0.0, g3).V == 0.0);
  CHECK(potential(g3.mu0(), g3).Vprime == Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(potential_derivative(1e12, g3) + std::log(0.5)) < 1e-10);
  CHECK_THROWS_AS(potential(16.0, g3), Error);
  CHECK_THROWS_AS(G::make(0.5, 0, 0.5), Error);
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(G::make(10, 0, 0.5)) == Regime::kIA);
  CHECK(classify_regime(G::make(15, 3, 0.5)) == Regime::kIB);
  CHECK(classify_regime(G::make(4, 0, 0.5)) == Regime::kIIA);
  CHECK(classify_regime(G::make(4, 3, 0.5)) == Regime::kIIB);
  const double rc = G::make(1, 0, 0.5).Rc();
  CHECK_THROWS_AS(classify_regime(G::make(rc, 0, 0.5)), Error);
  CHECK_THROWS_AS(classify_regime(G::make(10, 1, 0.5)), Error);
  const auto qc2 = regime_two_critical_Q(4.0, 0.5);
  REQUIRE(qc2.has_value());
  CHECK(*qc2 == Approx(1.196496933702323475).epsilon(1e-9));
  CHECK(classify_regime(G::make(4, *qc2 - 1e-3, 0.5)) == Regime::kIIA);
  CHECK(classify_regime(G::make(4, *qc2 + 1e-3, 0.5)) == Regime::kIIB);
  // Regime II on the gas side is D_II on the lattice side.
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ur(1.01, 20), uq(0, 5), ua(0.05, 0.95);
  for (int i = 0; i < 300; ++i) {
    const G g{ur(rng), uq(rng), ua(rng)};
    const auto p = asympt::ScaledPoint<double>::from_gas(g.R, g.Q);
    const bool two = g.R < g.Rc();
    CHECK(two == (g.alpha > asympt::alpha_c(p)));
  }
}

TEST_CASE("regime one end-points") {
  const auto g = G::make(10, 0, 0.5);
  const auto s = endpoints(g);
  CHECK(s.a == Approx(3 - 2 * std::sqrt(2.0)));
  CHECK(s.b == Approx(3 + 2 * std::sqrt(2.0)));
  CHECK(regime_one_residuals(s.a, s.b, 1, g).max() <= 1e-12);
  const auto g2 = G::make(15, 3, 0.5);
  const auto s2 = endpoints(g2);
  CHECK(s2.nu == -1);
  CHECK(regime_one_residuals(s2.a, s2.b, -1, g2).max() <= 1e-12);
  CHECK(regime_one_residuals(s2.a, s2.b, 1, g2).max() > 1e-3);
}

TEST_CASE("regime two end-points") {
  struct Golden { double R, Q, alpha, eta, a, b, E; int nu; };
  const Golden cases[] = {
      {4, 0, 0.5, 0.17157287525380990240, 0.17801016489750621289, 3.9935627103563036895, 1.3566017177982128660, 1},
      {4, 3, 0.5, 0.13539658828900570341, 0.13815303180006390627, 3.9252468690986349951, 2.3678550502418321700, -1},
      {2.5, 1, 0.3, 0.27987409551937822990, 0.096607434565353844227, 2.4671585633226815210, 1.0751200975802636158, 1},
  };
  for (const auto& c : cases) {
    const auto g = G::make(c.R, c.Q, c.alpha);
    const auto s = endpoints(g);
    CHECK(*s.eta == Approx(c.eta).epsilon(1e-13));
    CHECK(std::abs(*s.eta - *s.eta_quartic_gas) <= 1e-10);
    CHECK(s.a == Approx(c.a).epsilon(1e-12));
    CHECK(s.b == Approx(c.b).epsilon(1e-12));
    CHECK(s.nu == c.nu);
    CHECK(regime_two_residuals(s.a, s.b, s.nu, g).max() <= 1e-10);
    CHECK(regime_two_residuals(s.a, s.b, -s.nu, g).max() > 1e-4);
    CHECK(first_moment(s, g) == Approx(c.E).epsilon(1e-12));
    CHECK(first_moment_endpoints(s, g) == Approx(c.E).epsilon(1e-12));
    const auto& x = *s.aux;
    CHECK(x.Ap * x.Am == Approx(x.Bp * x.Bm).epsilon(1e-13));
    CHECK(x.Ap * x.Am == Approx(x.Cp * x.Cm).epsilon(1e-13));
    CHECK(x.Ap + x.Am == Approx(x.Bp + x.Bm - c.Q).epsilon(1e-13));
    CHECK(x.Ap + x.Am == Approx(c.R - x.Cp - x.Cm).epsilon(1e-13));
    CHECK(x.Ap + x.Bp + 2 * x.Cp == Approx(x.Np).epsilon(1e-13));
    CHECK(x.Am + x.Bm + 2 * x.Cm == Approx(x.Nm).epsilon(1e-13));
    CHECK(curve_residual(x, c.Q) <= 1e-10);
    CHECK(alpha_eq_lhs(g, *s.eta) == Approx(1.0).epsilon(1e-14));
  }
  // The N+N+ reading of the curve does not hold.
  const auto g = G::make(2.5, 1, 0.3);
  const auto x = *endpoints(g).aux;
  const double d = x.zp - x.zm;
  CHECK(std::abs(g.Q * g.Q * x.zp * x.zm - (x.Nm * x.zp + x.Np * x.zm - x.Np * x.Np) * d * d) > 1e-3);
}

TEST_CASE("band collapse as R -> 1") {
  double previous = 1e9;
  for (double R : {1.5, 1.1, 1.01, 1.001}) {
    const auto s = endpoints(G::make(R, 0.5, 0.5));
    CHECK(s.b - s.a < previous);
    previous = s.b - s.a;
  }
  CHECK(previous < 0.1);
}

TEST_CASE("resolvent properties in all regimes") {
  const G gases[] = {G::make(10, 0, 0.5), G::make(15, 3, 0.5), G::make(4, 0, 0.5), G::make(4, 3, 0.5)};
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-30, 30);
  for (const auto& g : gases) {
    const auto s = endpoints(g);
    const auto sq = solve_quad(g);
    const auto gq = to_quad(g);
    const Quad big(1e6);
    const auto w = resolvent(ComplexQuad(big, 0), sq, gq);
    // z W - 1 = E/z + O(z^-2).
    CHECK(std::abs(static_cast<double>(abs(big * w - Quad(1)))) <= 1e-5);
    CHECK(static_cast<double>(big * (big * w - Quad(1)).real()) == Approx(first_moment(s, g)).epsilon(1e-5));
    const double e_large = static_cast<double>(first_moment_large_z(big, sq, gq));
    CHECK(e_large == Approx(first_moment(s, g)).epsilon(1e-6));
    CHECK(std::abs(e_large - first_moment(s, g)) <= 1e-6);
    // Real on (R, inf).
    CHECK(std::abs(resolvent(Cd(g.R + 2.5, 0), s, g).imag()) <= 1e-14);
    for (int i = 0; i < 100; ++i) {
      const Cd z(u(rng), u(rng));
      const Cd w1 = resolvent(z, s, g), w2 = resolvent(std::conj(z), s, g);
      CHECK(std::abs(w1 - std::conj(w2)) <= 1e-12 * (1 + std::abs(w1)));
    }
    CHECK_THROWS_AS(resolvent(Cd(0.5 * (s.a + s.b), 0), s, g), Error);
  }
}

TEST_CASE("band density edges") {
  const auto gia = G::make(10, 0, 0.5);
  const auto sia = endpoints(gia);
  CHECK(band_density(sia.a, sia, gia) == Approx(1.0));
  CHECK(band_density(sia.b, sia, gia) == Approx(0.0));
  const auto gib = G::make(15, 3, 0.5);
  const auto sib = endpoints(gib);
  CHECK(std::abs(band_density(sib.a, sib, gib)) <= 1e-15);
  CHECK(std::abs(band_density(sib.b, sib, gib)) <= 1e-15);
  const auto g2 = G::make(4, 0, 0.5);
  const auto s2 = endpoints(g2);
  CHECK(band_density(s2.a, s2, g2) == Approx(1.0));
  CHECK(band_density(s2.b, s2, g2) == Approx(1.0));
  const auto gb = G::make(4, 3, 0.5);
  const auto sb = endpoints(gb);
  // The arctan IIB combination ends at -1 and 0.
  CHECK(band_density(sb.a, sb, gb, IIBDensity::kArctan) == Approx(-1.0));
  CHECK(std::abs(band_density(sb.b, sb, gb, IIBDensity::kArctan)) <= 1e-15);
  CHECK_THROWS_AS(band_density(sb.b + 0.1, sb, gb), Error);
}

TEST_CASE("density oracle against formulas") {
  for (const auto& g : {G::make(10, 0, 0.5), G::make(15, 3, 0.5), G::make(4, 0, 0.5)}) {
    const auto s = endpoints(g);
    for (int k = 1; k < 8; ++k) {
      const double mu = s.a + (s.b - s.a) * k / 8.0;
      CHECK(std::abs(density_oracle(mu, 1e-8, s, g) - band_density(mu, s, g)) <= 1e-4);
      const double r1 = density_oracle(mu, 1e-5, s, g), r2 = density_oracle(mu, 2e-5, s, g);
      CHECK(std::abs(2 * r1 - r2 - band_density(mu, s, g)) <= 1e-8);
    }
  }
  const auto gib = G::make(15, 3, 0.5);
  const auto sib = endpoints(gib);
  CHECK(std::abs(density_oracle(sib.a / 2, 1e-8, sib, gib)) <= 1e-6);
  const auto g2 = G::make(4, 0, 0.5);
  const auto s2 = endpoints(g2);
  CHECK(density_oracle(s2.a / 2, 1e-8, s2, g2) == Approx(1.0).epsilon(1e-6));
  CHECK(density_oracle((s2.b + g2.R) / 2, 1e-8, s2, g2) == Approx(1.0).epsilon(1e-6));
}

TEST_CASE("IIB oracle is the reconstructed 1 - t1 + t2 - t3") {
  const auto g = G::make(4, 3, 0.5);
  const auto s = endpoints(g);
  for (int k = 1; k < 8; ++k) {
    const double mu = s.a + (s.b - s.a) * k / 8.0;
    const double t1 = std::atan(std::sqrt(s.a * (s.b - mu) / (s.b * (mu - s.a)))) / M_PI;
    const double t2 = std::atan(std::sqrt((s.a + g.Q) * (s.b - mu) / ((s.b + g.Q) * (mu - s.a)))) / M_PI;
    const double t3 = 2 * std::atan(std::sqrt((g.R - s.a) * (s.b - mu) / ((g.R - s.b) * (mu - s.a)))) / M_PI;
    CHECK(band_density(mu, s, g) == Approx(1 - t1 + t2 - t3).epsilon(1e-12));
    CHECK(std::abs(band_density(mu, s, g, IIBDensity::kArctan) - band_density(mu, s, g)) > 1e-3);
  }
  CHECK(band_density(s.a, s, g) == Approx(0.0).epsilon(1e-12));
  CHECK(band_density(s.b, s, g) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("profiles: bounds, normalization, first moment") {
  for (const auto& g : {G::make(10, 0, 0.5), G::make(15, 3, 0.5), G::make(4, 0, 0.5), G::make(4, 3, 0.5)}) {
    const auto s = endpoints(g);
    const auto prof = profile(s, g);
    for (int k = 0; k <= 1000; ++k) {
      const double rho = prof(g.R * k / 1000.0);
      CHECK(rho >= -1e-12);
      CHECK(rho <= 1 + 1e-12);
    }
    const auto m = moments(prof);
    CHECK(m.mass.converged);
    CHECK(std::abs(m.normalization - 1) <= 1e-8);
    CHECK(std::abs(m.first_moment - first_moment(s, g)) <= 1e-8);
  }
}

TEST_CASE("variational condition") {
  for (const auto& g : {G::make(10, 0, 0.5), G::make(15, 3, 0.5), G::make(4, 0, 0.5), G::make(4, 3, 0.5)}) {
    const auto s = endpoints(g);
    const double mu = s.a + 0.37 * (s.b - s.a);
    const double r4 = variational_residual(mu, 1e-4, s, g);
    const double r6 = variational_residual(mu, 1e-6, s, g);
    CHECK(r6 < r4);
    CHECK(r6 <= 1e-3);
  }
}

TEST_CASE("regime boundary continuity") {
  const double alpha = 0.5, Q = 0.5;
  const double rc = G::make(1, Q, alpha).Rc();
  const auto above = endpoints(G::make(rc * (1 + 1e-6), Q, alpha));
  const auto below = endpoints(G::make(rc * (1 - 1e-6), Q, alpha));
  CHECK(is_regime_two(below.regime));
  CHECK(above.b <= rc * (1 + 1e-6));
  CHECK(above.b == Approx(rc).epsilon(1e-5));
  CHECK(below.b == Approx(rc).epsilon(1e-4));
  CHECK(below.a == Approx(above.a).epsilon(1e-4));
}
