#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "functoria/satake.hpp"

using namespace functoria;

namespace {

constexpr double kTol = 1e-12;

bool close(cplx a, cplx b, double tol = kTol) { return std::abs(a - b) <= tol; }

// multiset equality by the sorted-order convention
bool same_params(const ParamSet& P, const ParamSet& Q, double tol = 1e-9) {
  if (P.degree() != Q.degree()) return false;
  for (std::size_t i = 0; i < P.degree(); ++i)
    if (!close(P.params[i], Q.params[i], tol)) return false;
  return true;
}

cplx power_sum(const ParamSet& P) {
  cplx s = 0;
  for (cplx x : P.params) s += x;
  return s;
}

}  // namespace

TEST_CASE("parameters are unit-modulus conjugates inside the bound") {
  for (double lam : {0.0, 0.3, -1.7, 1.9999, -2.0, 2.0}) {
    const SatakePair s = satake_from_lambda(lam);
    CHECK(std::abs(s.alpha * s.beta - 1.0) < kTol);   // determinant one
    CHECK(std::abs(s.alpha + s.beta - lam) < kTol);   // trace lambda
    CHECK(std::abs(std::abs(s.alpha) - 1.0) < kTol);  // unitary
    CHECK(close(s.beta, std::conj(s.alpha)));
    CHECK(s.alpha.imag() >= -kTol);  // ordering convention
  }
}

TEST_CASE("parameters outside the bound are real with the larger root first") {
  for (double lam : {2.5, -2.5, 10.0}) {
    const SatakePair s = satake_from_lambda(lam);
    CHECK(s.alpha.imag() == 0.0);
    CHECK(s.beta.imag() == 0.0);
    CHECK(std::abs(s.alpha * s.beta - 1.0) < kTol);
    CHECK(std::abs(s.alpha + s.beta - lam) < 1e-9);
    CHECK(s.alpha.real() >= s.beta.real());
  }
}

TEST_CASE("non-finite input is rejected") {
  CHECK_THROWS(satake_from_lambda(std::nan("")));
  CHECK_THROWS(satake_from_lambda(INFINITY));
}

TEST_CASE("symmetric power parameters") {
  const SatakePair s = satake_from_lambda(0.7);
  for (unsigned m = 1; m <= 4; ++m) {
    const ParamSet P = sym_power_params(s, m);
    CHECK(P.degree() == m + 1);
    // the trace of sym^m is the degree-m Chebyshev-like polynomial in lambda,
    // equal to sin((m+1)t)/sin t with 2 cos t = lambda
    const double t = std::acos(0.7 / 2.0);
    const double expect = std::sin((m + 1) * t) / std::sin(t);
    CHECK(power_sum(P).real() == doctest::Approx(expect).epsilon(1e-10));
    CHECK(std::abs(power_sum(P).imag()) < 1e-10);
    // sorted-by-(re,im) storage
    for (std::size_t i = 1; i < P.degree(); ++i) {
      const cplx a = P.params[i - 1], b = P.params[i];
      CHECK((a.real() < b.real() + kTol));
    }
  }
  CHECK_THROWS(sym_power_params(s, 0));
  CHECK_THROWS(sym_power_params(s, 5));
}

TEST_CASE("sym^1 recovers the pair itself") {
  const SatakePair s = satake_from_lambda(-1.2);
  const ParamSet P = sym_power_params(s, 1);
  std::vector<cplx> got = P.params;
  std::vector<cplx> want = {s.alpha, s.beta};
  std::sort(want.begin(), want.end(),
            [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  CHECK(close(got[0], want[0]));
  CHECK(close(got[1], want[1]));
}

TEST_CASE("pairing traces multiply for unitary inputs") {
  const SatakePair s1 = satake_from_lambda(0.7);
  const SatakePair s2 = satake_from_lambda(-1.1);
  const ParamSet P = sym_power_params(s1, 1);
  const ParamSet Q = sym_power_params(s2, 1);

  const ParamSet R = rankin_selberg_params(P, Q);
  CHECK(R.degree() == 4);
  // on the unitary locus conj(y) runs over the same multiset as y
  CHECK(power_sum(R).real() == doctest::Approx(0.7 * -1.1).epsilon(1e-10));

  const ParamSet T = tensor_params(P, Q);
  CHECK(T.degree() == 4);
  CHECK(same_params(R, T));  // conjugation permutes {alpha, beta} here
}

TEST_CASE("rankin-selberg distinguishes non-unitary inputs from tensor") {
  const SatakePair wild = satake_from_lambda(2.5);  // real parameters, |alpha| != 1
  const ParamSet P = sym_power_params(wild, 1);
  const ParamSet prod = rankin_selberg_params(P, P);
  // x conj(y) with real params is plain xy, so the trace is (a+b)^2
  CHECK(power_sum(prod).real() == doctest::Approx(2.5 * 2.5).epsilon(1e-10));
}

TEST_CASE("exterior square of the pair product") {
  const SatakePair s1 = satake_from_lambda(0.9);
  const SatakePair s2 = satake_from_lambda(-0.4);
  const ParamSet E = exterior_square_gl4(s1, s2);
  REQUIRE(E.degree() == 6);

  // expected multiset {a^2 ... } in disguise: alpha1^2, beta1^2, alpha2^2,
  // beta2^2 and two copies of 1
  std::vector<cplx> want = {s1.alpha * s1.alpha, s1.beta * s1.beta, s2.alpha * s2.alpha,
                            s2.beta * s2.beta, 1.0, 1.0};
  std::sort(want.begin(), want.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (std::size_t i = 0; i < 6; ++i) CHECK(close(E.params[i], want[i]));

  // power-sum identity: sum of the multiset is (l1^2 - 2) + (l2^2 - 2) + 2
  const double l1 = 0.9, l2 = -0.4;
  const double expect = (l1 * l1 - 2.0) + (l2 * l2 - 2.0) + 2.0;
  CHECK(power_sum(E).real() == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("zeta parameters are a single one") {
  const ParamSet Z = zeta_params();
  CHECK(Z.degree() == 1);
  CHECK(close(Z.params[0], 1.0));
}
