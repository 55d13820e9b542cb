#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "functoria/primes.hpp"
#include "functoria/satake.hpp"
#include "functoria/types.hpp"

namespace functoria {

// ---------------------------------------------------------------------------
// local factors
// ---------------------------------------------------------------------------

// power-series coefficients of prod_x (1 - x t)^(-1) in t = p^(-s):
// h[j] is the complete homogeneous symmetric polynomial of degree j
struct LocalFactor {
  uint32_t p = 0;
  std::vector<cplx> h;  // h[0] = 1

  unsigned depth() const { return h.empty() ? 0 : unsigned(h.size() - 1); }
};

LocalFactor local_coeffs(const ParamSet& params, uint32_t p, unsigned depth);

// ---------------------------------------------------------------------------
// truncated coefficient sequences
// ---------------------------------------------------------------------------

struct CoeffSeq {
  std::vector<cplx> a;  // size n_max + 1, a[0] unused sentinel
  bool all_real = false;
  std::string meta;

  std::size_t n_max() const { return a.empty() ? 0 : a.size() - 1; }
  // real part accessor for sequences that went through realify()
  double real_at(std::size_t n) const { return a[n].real(); }
};

// e(1) = 1, e(n > 1) = 0
CoeffSeq unit_seq(std::size_t n_max);
// a(n) = 1 for all n (zeta coefficients)
CoeffSeq ones_seq(std::size_t n_max);

// largest |Im a(n)|, for reality assertions
double max_imag(const CoeffSeq& a);

// zero out imaginary parts and set all_real after checking the imaginary
// residue is below tol relative to each entry's magnitude (floored at 1);
// throws format_error when the check fails
void realify(CoeffSeq& a, double tol = 1e-9);

// a(n) = prod_p h_{v_p(n)}(p) from per-prime local factors; throws
// missing_local_error when a prime or depth is absent.  expect_real realifies
// the result (constructions whose parameter multisets are conjugation-closed)
CoeffSeq expand_multiplicative(const std::map<uint32_t, LocalFactor>& locals, std::size_t n_max,
                               const FactorSieve& sieve, std::string meta, bool expect_real);

// convenience: build locals for every p <= n_max at depth floor(log_p n_max)
// from a generator and expand
CoeffSeq expand_from_generator(const std::function<LocalFactor(uint32_t, unsigned)>& gen,
                               std::size_t n_max, const FactorSieve& sieve, std::string meta,
                               bool expect_real);

// c(n) = sum_{de=n} a(d) b(e); fixed summation order (contributions to each
// entry arrive in increasing divisor order) for bit-reproducible output
CoeffSeq convolve(const CoeffSeq& a, const CoeffSeq& b);

// u with convolve(b, u) = a, by forward elimination; requires b(1) != 0
CoeffSeq divide(const CoeffSeq& a, const CoeffSeq& b);

// partial value sum_{n<=N} a(n) n^(-s) plus the absolute tail over (N/2, N]
// as a convergence diagnostic
struct PartialEval {
  cplx value;
  double tail_abs = 0.0;
};

PartialEval evaluate_partial(const CoeffSeq& a, double s);

// CSV export: one "# meta:" line, then n,value_re[,value_im]
void write_coeff_csv(const CoeffSeq& a, const std::string& path);

}  // namespace functoria
