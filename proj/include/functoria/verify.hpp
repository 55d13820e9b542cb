#pragma once

#include <string>
#include <vector>

#include "functoria/eigenforms.hpp"
#include "functoria/primes.hpp"

namespace functoria {

struct CheckReport {
  std::string check;
  std::size_t n = 0;           // range the check ran over
  double max_abs_error = 0.0;  // 0 for exact-integer checks
  bool pass = false;
  std::string note;            // first failure location or extra diagnostics
};

// exact multiplicativity and p-power recursion over every n <= n_max
CheckReport verify_hecke(const QExpansion& q, const FactorSieve& sieve);

// |lambda(p)| <= 2 + 1e-9 at every prime; max_abs_error = max |lambda(p)| - 2
CheckReport verify_deligne(const Eigenform& f, const FactorSieve& sieve);

// extend_multiplicatively over lambda_prime_power tables vs direct
// normalization, pointwise within 1e-9
CheckReport verify_normalization(const QExpansion& q, const Eigenform& f,
                                 const FactorSieve& sieve);

// named suites driving the module invariants; suite is one of
// hecke, deligne, corrections, dual-route, basechange, all
std::vector<CheckReport> run_suite(const std::string& suite, std::size_t n_max);

}  // namespace functoria
