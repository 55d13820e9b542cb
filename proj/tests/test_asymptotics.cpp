#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "functoria/asymptotics.hpp"
#include "functoria/dirichlet.hpp"

using namespace functoria;

TEST_CASE("partial sums accumulate real parts at the checkpoints") {
  const CoeffSeq d = convolve(ones_seq(100), ones_seq(100));
  const PartialSumSeries s = partial_sums(d, {10, 50, 100});
  REQUIRE(s.x.size() == 3);
  CHECK(s.S[0] == doctest::Approx(27.0));  // sum of d(n), n <= 10

  const PartialSumSeries ones = partial_sums(ones_seq(64), {1, 2, 64});
  CHECK(ones.S[0] == doctest::Approx(1.0));
  CHECK(ones.S[1] == doctest::Approx(2.0));
  CHECK(ones.S[2] == doctest::Approx(64.0));
}

TEST_CASE("checkpoint validation") {
  const CoeffSeq one = ones_seq(50);
  CHECK_THROWS(partial_sums(one, {10, 5}));     // not increasing
  CHECK_THROWS(partial_sums(one, {0, 10}));     // below range
  CHECK_THROWS(partial_sums(one, {10, 51}));    // beyond range
  CHECK_THROWS(partial_sums(one, {}));          // empty checkpoint list
  CHECK(dyadic_checkpoints(3, 6) == std::vector<std::size_t>({8, 16, 32, 64}));
}

TEST_CASE("plain linear model is recovered exactly") {
  PartialSumSeries s;
  for (unsigned k = 7; k <= 18; ++k) {
    const double x = std::pow(2.0, k);
    s.x.push_back(x);
    s.S.push_back(3.25 * x);
  }
  const FitResult fit = fit_main(s, 0);
  CHECK(fit.coeff.size() == 1);
  CHECK(fit.coeff[0] == doctest::Approx(3.25).epsilon(1e-12));
  CHECK(fit.residual_norm < 1e-10);
  CHECK(fit.half_range_drift < 1e-9);
  CHECK(fit.model_name() == "cx");
  CHECK(fit.main_at(1000.0) == doctest::Approx(3250.0));

  const ExponentFit ex = error_exponent(s, fit);
  CHECK(ex.degenerate);  // residuals are numerically zero
}

TEST_CASE("log-linear model is recovered exactly") {
  PartialSumSeries s;
  for (unsigned k = 7; k <= 20; ++k) {
    const double x = std::pow(2.0, k);
    s.x.push_back(x);
    s.S.push_back(x * (2.0 * std::log(x) + 5.0));
  }
  const FitResult fit = fit_main(s, 1);
  REQUIRE(fit.coeff.size() == 2);
  CHECK(fit.coeff[0] == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(fit.coeff[1] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(fit.model_name() == "cxlogx");
  CHECK(fit.half_range_drift < 1e-8);

  const FitResult quad = fit_main(s, 2);
  CHECK(quad.model_name() == "xlogpoly2");
  CHECK(quad.coeff[2] == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("known power-law residue shows up as the error exponent") {
  PartialSumSeries s;
  for (unsigned k = 7; k <= 20; ++k) {
    const double x = std::pow(2.0, k);
    s.x.push_back(x);
    s.S.push_back(2.0 * x + std::pow(x, 0.6));
  }
  FitResult fit;
  fit.log_degree = 0;
  fit.coeff = {2.0};  // pin the true main term; residual is exactly x^0.6
  const ExponentFit ex = error_exponent(s, fit);
  CHECK_FALSE(ex.degenerate);
  CHECK(ex.points_used == 14);
  CHECK(ex.slope == doctest::Approx(0.6).epsilon(1e-9));
}

TEST_CASE("fits need enough points and variation") {
  PartialSumSeries s;
  s.x = {128.0, 256.0, 512.0};
  s.S = {128.0, 256.0, 512.0};
  CHECK_THROWS(fit_main(s, 1));  // needs >= 4 points for two coefficients
  CHECK_THROWS(error_exponent(s, fit_main(s, 0)));  // < 8 checkpoints
}

TEST_CASE("polynomial-growth exponents") {
  ExponentResult r = landau_exponent(36, 2);
  CHECK(r.exponent == Rational(35, 37));
  CHECK(r.log_power == 1);

  r = landau_exponent(2, 1);
  CHECK(r.exponent == Rational(1, 3));
  CHECK(r.log_power == 0);

  r = landau_exponent(16, 1);
  CHECK(r.exponent == Rational(15, 17));

  CHECK_THROWS(landau_exponent(1, 1));
  CHECK_THROWS(landau_exponent(4, 0));
}

TEST_CASE("contour balance with exact rationals") {
  PerronResult r = perron_balance(Rational(53, 342), {2, 4});
  CHECK(r.g == Rational(395, 342));
  CHECK(r.T_exp == Rational(171, 737));
  CHECK(r.error_exp == Rational(566, 737));

  r = perron_balance(Rational(0), {2, 4});
  CHECK(r.g == Rational(1));
  CHECK(r.T_exp == Rational(1, 4));
  CHECK(r.error_exp == Rational(3, 4));

  r = perron_balance(Rational(1, 6), {2, 4});
  CHECK(r.error_exp == Rational(10, 13));

  CHECK_THROWS(perron_balance(Rational(-1, 2), {2}));
  CHECK_THROWS(perron_balance(Rational(0), {}));  // g = -1 degenerates
}
