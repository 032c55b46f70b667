#include "doctest.h"

#include "lshape/exact/efp.hpp"

using namespace lshape;
using namespace lshape::exact;

namespace {
Rational q(long p, long d = 1) { return Rational(p, d); }
LshapeDims dims(int r, int s, int q) { return LshapeDims::make(r, s, q); }
}  // namespace

TEST_CASE("meixner weight") {
  CHECK(meixner_weight(0, 5, q(2, 3)) == 1);
  CHECK(meixner_weight(3, 0, q(1, 2)) == q(1, 8));
  CHECK(meixner_weight(3, 2, q(1, 2)) == q(5, 4));
}

TEST_CASE("hankel matrix entries") {
  const Rational a = q(2, 7);
  auto h = hankel_matrix(dims(2, 1, 0), a);
  CHECK(h(0, 0) == 1 + a);
  h = hankel_matrix(dims(1, 1, 0), a);
  CHECK(h(0, 0) == 1);
  h = hankel_matrix(dims(2, 2, 0), a);
  CHECK(h(0, 0) == 1 + a);
  CHECK(h(0, 1) == a);
  CHECK(h(1, 0) == a);
  CHECK(h(1, 1) == a);
  CHECK_THROWS_AS(hankel_matrix(dims(2, 0, 0), a), Error);
}

TEST_CASE("hankel matrix is symmetric positive definite for s <= r") {
  for (int r = 1; r <= 6; ++r)
    for (int s = 1; s <= r && s <= 3; ++s)
      for (int qq = 0; qq <= 3; ++qq) {
        auto h = hankel_matrix(dims(r, s, qq), q(1, 3));
        CHECK(h == h.transpose());
        for (const auto& minor : leading_minors(h)) CHECK(minor > 0);
      }
}

TEST_CASE("bareiss matches rational and scaled integer routes") {
  const auto d = dims(5, 3, 2);
  const Rational a = q(3, 5);
  const Rational direct = bareiss_determinant(hankel_matrix(d, a));
  CHECK(direct == hankel_determinant(d, a));
  Matrix<Rational> m(3, 3);
  m << 0, 1, 2, 3, 4, 5, 6, 7, 9;
  CHECK(bareiss_determinant(m) == -3);
  CHECK(bareiss_determinant(Matrix<Rational>(m.cast<Rational>())) == -3);
}

TEST_CASE("efp_hankel frozen values") {
  CHECK(efp_hankel(dims(2, 1, 0), q(1, 2)) == q(3, 4));
  CHECK(efp_hankel(dims(2, 2, 0), q(1, 2)) == q(1, 16));
  CHECK(efp_hankel(dims(3, 2, 1), q(1, 3)) == q(640, 2187));
  CHECK(efp_hankel(dims(5, 3, 2), q(2, 3)) == Rational(205619, Integer("10460353203")));
  CHECK(efp_hankel(dims(6, 3, 3), q(1, 4)) ==
        Rational(Integer("1583749776700215"), Integer("4503599627370496")));
  CHECK(efp_hankel(dims(4, 2, 3), q(1, 2)) == q(263, 8192));
  for (int r = 1; r <= 4; ++r) CHECK(efp_hankel(dims(r, 0, 2), q(1, 3)) == 1);
}

TEST_CASE("efp alpha conventions") {
  CHECK(efp_hankel(dims(3, 2, 1), q(0)) == 1);
  CHECK(efp_hankel(dims(3, 1, 1), q(0), AlphaZero::kStrict) == 1);
  CHECK_THROWS_AS(efp_hankel(dims(3, 2, 1), q(0), AlphaZero::kStrict), Error);
  CHECK(efp_hankel(dims(3, 2, 1), q(1)) == 0);
  CHECK(efp_hankel(dims(1, 2, 0), q(0)) == 0);
  CHECK(efp_hankel(dims(1, 2, 0), q(1, 2)) == 0);
  CHECK_THROWS_AS(efp_hankel(dims(3, 2, 1), q(3, 2)), Error);
}

TEST_CASE("r = s gives (1 - alpha)^{s^2}") {
  for (int s = 1; s <= 3; ++s) {
    const Rational a = q(2, 5);
    Rational expected(1);
    for (int i = 0; i < s * s; ++i) expected *= 1 - a;
    CHECK(efp_hankel(dims(s, s, 0), a) == expected);
    const auto o = coulomb_sum_oracle(dims(s, s, 0), a);
    CHECK(o.efp == expected);
    Rational power(1);
    for (int i = 0; i < s * (s - 1) / 2; ++i) power *= a;
    CHECK(o.integral == power);
  }
}

TEST_CASE("oracle examples and guard") {
  const auto o = coulomb_sum_oracle(dims(2, 1, 0), q(1, 2));
  CHECK(o.integral == q(3, 2));
  CHECK(o.efp == q(3, 4));
  CHECK(coulomb_sum_oracle(dims(2, 2, 0), q(1, 2)).efp == q(1, 16));
  CHECK(coulomb_sum_oracle(dims(4, 2, 1), q(0)).efp == 1);
  CHECK_THROWS_AS(coulomb_sum_oracle(dims(5, 5, 0), q(1, 2)), Error);
  CHECK_THROWS_AS(coulomb_sum_oracle(dims(60, 4, 0), q(1, 2)), Error);
}

TEST_CASE("monotone in s and bounded by one") {
  for (int r = 1; r <= 6; ++r)
    for (int qq = 0; qq <= 3; ++qq) {
      Rational previous(1);
      for (int s = 0; s <= 3; ++s) {
        const Rational f = efp_hankel(dims(r, s, qq), q(1, 2));
        CHECK(f >= 0);
        CHECK(f <= previous);
        previous = f;
      }
    }
}

TEST_CASE("hahn gram product") {
  CHECK(hahn_gram_product(dims(2, 1, 0)) == 2);
  CHECK(hahn_gram_product(dims(2, 1, 1)) == 3);
  CHECK(hahn_gram_product(dims(3, 2, 0)) == 6);
  CHECK_THROWS_AS(hahn_gram_product(dims(2, 3, 0)), Error);
  for (int r = 1; r <= 6; ++r)
    for (int s = 1; s <= r && s <= 3; ++s)
      for (int qq = 0; qq <= 3; ++qq)
        CHECK(Rational(hahn_gram_product(dims(r, s, qq))) == hankel_determinant(dims(r, s, qq), q(1)));
  // r = 1, s = 1, q = 2: F = (1 - alpha)^3 exactly.
  CHECK(alpha1_coefficient(dims(1, 1, 2)) == 1);
}

TEST_CASE("log_efp against exact values") {
  CHECK(log_efp(dims(12, 4, 2), q(1, 2)) == doctest::Approx(-2.671983956221233).epsilon(1e-13));
  CHECK(log_efp(dims(10, 5, 1), q(2, 5)) == doctest::Approx(-3.864632298007848).epsilon(1e-13));
  CHECK(log_efp(dims(24, 8, 0), q(1, 2)) == doctest::Approx(-4.32769015096025915833).epsilon(1e-13));
  CHECK(log_efp(dims(20, 10, 5), q(2, 3)) == doctest::Approx(-86.1123755141787749406).epsilon(1e-13));
  const auto d = dims(6, 3, 3);
  CHECK(log_coulomb_integral(d, q(1, 4)) ==
        doctest::Approx(log_positive(coulomb_sum_oracle(d, q(1, 4)).integral)).epsilon(1e-13));
}

TEST_CASE("real path agrees with exact path") {
  using R = RealBits<256>;
  const R lf = log_efp_real(dims(24, 8, 0), R(0.5));
  CHECK(static_cast<double>(lf) == doctest::Approx(-4.32769015096025915833).epsilon(1e-14));
  const R lf2 = log_efp_real(dims(20, 10, 5), R(2) / 3);
  CHECK(static_cast<double>(lf2) == doctest::Approx(-86.1123755141787749406).epsilon(1e-14));
  const double via_dispatch = dispatch_precision(128, [](auto zero) {
    using T = decltype(zero);
    return static_cast<double>(efp_real(dims(3, 2, 1), T(1) / 3));
  });
  CHECK(via_dispatch == doctest::Approx(640.0 / 2187.0).epsilon(1e-15));
}

TEST_CASE("partition functions") {
  const auto p2 = ModelParams::make(q(1, 2), q(2));
  CHECK(partition_square<double>(1, p2) == doctest::Approx(2.0));
  CHECK(partition_square<double>(2, p2) == doctest::Approx(8.0));
  CHECK(partition_square<double>(3, ModelParams::make(q(1, 3), q(1))) == doctest::Approx(1.0));
  CHECK(partition_lshape<double>(dims(2, 0, 1), p2) == doctest::Approx(partition_square<double>(3, p2)));
  const double rho = 3, a = 0.25;
  const auto p3 = ModelParams::make(q(1, 4), q(3));
  CHECK(partition_lshape<double>(dims(1, 1, 0), p3) ==
        doctest::Approx(std::pow(rho, 2.5) * std::sqrt(1 - a)));
  const double w2 = std::sqrt(2 * 0.5);
  CHECK(partition_lshape<double>(dims(2, 1, 0), p2) == doctest::Approx(64.0 * 0.75 / w2));
  const auto w = p3.weights<double>();
  CHECK(w.free_fermion_defect() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(ModelParams::make(q(3, 2), q(1)), Error);
  CHECK_THROWS_AS(partition_lshape<double>(dims(2, 1, 0), ModelParams::make(q(1), q(2))), Error);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("1/2") == q(1, 2));
  CHECK(parse_rational("-3/6") == q(-1, 2));
  CHECK(parse_rational("0.125") == q(1, 8));
  CHECK(parse_rational("1e-3") == q(1, 1000));
  CHECK(parse_rational("2.5E+1") == q(25));
  CHECK(parse_rational(" 7 ") == q(7));
  CHECK(parse_rational(".5") == q(1, 2));
  CHECK(parse_rational("007/010") == q(7, 10));
  CHECK(parse_rational("0.0625") == q(1, 16));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
  CHECK(to_string(q(3, 4)) == "3/4");
  CHECK(to_string(q(6, 3)) == "2");
  CHECK(to_decimal(0.1) == "0.1");
  CHECK(std::abs(log_abs(Integer(1) << 5000) - 5000 * std::log(2.0)) < 1e-9);
}
