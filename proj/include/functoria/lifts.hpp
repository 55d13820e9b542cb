#pragma once

#include <cstdint>
#include <vector>

#include "functoria/characters.hpp"
#include "functoria/dirichlet.hpp"
#include "functoria/eigenforms.hpp"
#include "functoria/primes.hpp"

namespace functoria {

// ---------------------------------------------------------------------------
// symmetric-power square series and their Rankin-Selberg counterparts
// ---------------------------------------------------------------------------

// a(n) = lambda(n^m)^2, built multiplicatively; m in 2..4
CoeffSeq series_Lm(const Eigenform& f, unsigned m, std::size_t n_max, const FactorSieve& sieve);

// coefficients of the degree-(m+1)^2 Rankin-Selberg square of the m-th
// symmetric power, from local parameter multisets
CoeffSeq series_RS_symm(const Eigenform& f, unsigned m, std::size_t n_max,
                        const FactorSieve& sieve);

// quotient series u_m = series_Lm / series_RS_symm; u_m(1) = 1 and u_m
// vanishes at every prime
CoeffSeq correction_Um(const Eigenform& f, unsigned m, std::size_t n_max,
                       const FactorSieve& sieve);

// standalone symmetric-power coefficient series (degree m+1), for the
// zeta * sym^2 * sym^4 factorization route
CoeffSeq series_sym_power(const Eigenform& f, unsigned m, std::size_t n_max,
                          const FactorSieve& sieve);

// ---------------------------------------------------------------------------
// mixed two-form constructions
// ---------------------------------------------------------------------------

// a(n) = lambda_1(n)^2 lambda_2(n^2)^2
CoeffSeq series_L12(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                    const FactorSieve& sieve);
// degree-36 Rankin-Selberg square of (f1 x sym^2 f2)
CoeffSeq series_RS12(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                     const FactorSieve& sieve);
CoeffSeq correction_V12(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                        const FactorSieve& sieve);

// a(n) = lambda_1(n)^2 lambda_2(n)^2
CoeffSeq series_L11(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                    const FactorSieve& sieve);
// degree-16 Rankin-Selberg square of (f1 x f2)
CoeffSeq series_RS11(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                     const FactorSieve& sieve);
CoeffSeq correction_V11(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                        const FactorSieve& sieve);

// ---------------------------------------------------------------------------
// exterior-square four-fold product
// ---------------------------------------------------------------------------

// four-fold convolution of lambda_1(a^2)^2, lambda_1(b^2) lambda_2(b^2),
// lambda_2(c^2) lambda_1(c^2), lambda_2(d^2)^2 (self-dual forms)
CoeffSeq series_wedge(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                      const FactorSieve& sieve);

// convolution of the four RS(sym^2 f_i x sym^2 f_j) series
CoeffSeq series_wedge_rs_route(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                               const FactorSieve& sieve);

// the same degree-36 series expanded from the 6x6 parameter products of the
// GL4 exterior-square multiset (must match series_wedge_rs_route exactly)
CoeffSeq series_wedge_param_route(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                                  const FactorSieve& sieve);

// ---------------------------------------------------------------------------
// base change to a degree-ell cyclic layer
// ---------------------------------------------------------------------------

// (b_0 * b_1 * ... * b_{ell-1})^(*ell) with b_j(n) = lambda(n)^2 chi^j(n)
CoeffSeq series_base_change(const Eigenform& f, uint32_t ell, const DirichletCharacter& chi,
                            std::size_t n_max, const FactorSieve& sieve);

// ---------------------------------------------------------------------------
// fourth-moment convergence diagnostic
// ---------------------------------------------------------------------------

struct MomentCheckpoint {
  uint64_t x = 0;         // prime cutoff
  double value = 0.0;     // partial product over p <= x
};

struct MomentReport {
  double sigma = 0.0;
  std::vector<MomentCheckpoint> checkpoints;   // dyadic cutoffs, then n_max
  double last_increment_abs = 0.0;             // P(x) - P(x/2) at the final cutoff
  double last_increment_log = 0.0;             // log P(x) - log P(x/2)
  double max_term_deviation = 0.0;             // max |([a_p]^8+[b_p]^8) - 2| over p
};

// partial products of prod_p (1 + (|alpha_p|^8 + |beta_p|^8) p^(-sigma))
MomentReport check_sym4_moment_bound(const Eigenform& f, double sigma, std::size_t n_max,
                                     const FactorSieve& sieve);

}  // namespace functoria
