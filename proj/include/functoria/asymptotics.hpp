#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "functoria/dirichlet.hpp"

namespace functoria {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// partial sums and main-term fits
// ---------------------------------------------------------------------------

struct PartialSumSeries {
  std::vector<double> x;  // increasing checkpoints
  std::vector<double> S;  // running sums of Re a(n) up to each checkpoint
};

PartialSumSeries partial_sums(const CoeffSeq& a, const std::vector<std::size_t>& checkpoints);

// checkpoints 2^lo, 2^(lo+1), ..., 2^hi
std::vector<std::size_t> dyadic_checkpoints(unsigned lo, unsigned hi);

// least squares of S(x)/x against {log^k x : k = 0..log_degree}.
// log_degree 0 is the plain c*x model, 1 the x(c1 log x + c0) model.
struct FitResult {
  unsigned log_degree = 0;
  std::vector<double> coeff;        // coeff[k] multiplies x log^k x
  double residual_norm = 0.0;       // rms of (S - fit)/x over the checkpoints
  std::vector<double> coeff_drift;  // per-coefficient half-range drift
  double half_range_drift = 0.0;    // max over coefficients

  double main_at(double x) const;   // fitted main term at x
  std::string model_name() const;   // "cx", "cxlogx", "xlogpoly<d>"
};

FitResult fit_main(const PartialSumSeries& S, unsigned log_degree);

// slope of log|S - main| against log x over the checkpoints, skipping points
// with |S - main| < 1e-12 |main|; degenerate when fewer than 2 points survive
struct ExponentFit {
  double slope = 0.0;
  bool degenerate = false;
  std::size_t points_used = 0;
};

ExponentFit error_exponent(const PartialSumSeries& S, const FitResult& fit);

// ---------------------------------------------------------------------------
// exact-rational exponent calculators
// ---------------------------------------------------------------------------

struct ExponentResult {
  Rational exponent;
  unsigned log_power = 0;
};

// nonnegative series of degree d with a pole of order k at s = 1:
// error exponent (d-1)/(d+1), log power k-1
ExponentResult landau_exponent(unsigned degree_d, unsigned pole_order_k);

// contour-shift balancing: g = -1 + theta + sum (m_i + 1)/4,
// T_exp = (1/2)/(1 + g), error_exp = 1 - T_exp
struct PerronResult {
  Rational g;
  Rational T_exp;
  Rational error_exp;
};

PerronResult perron_balance(const Rational& theta, const std::vector<unsigned>& moment_degrees);

}  // namespace functoria
