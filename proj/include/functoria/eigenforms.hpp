#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "functoria/primes.hpp"
#include "functoria/types.hpp"

namespace functoria {

// ---------------------------------------------------------------------------
// exact integer q-expansions of the two level-one eigenforms
// ---------------------------------------------------------------------------

// a[n] = n-th Fourier coefficient, 1-indexed; a[0] is an unused sentinel.
struct QExpansion {
  std::string form_id;  // "delta12" or "e4delta16"
  unsigned weight = 0;
  std::vector<Int256> a;

  std::size_t n_max() const { return a.empty() ? 0 : a.size() - 1; }
};

// tau(n) for n <= n_max via the eta-product expansion of the weight 12 form
QExpansion sieve_delta(std::size_t n_max);

// weight 16 form as E4 * Delta, E4 = 1 + 240 sum sigma_3(n) q^n
QExpansion build_weight16(std::size_t n_max);

// dispatch on form_id
QExpansion build_form(const std::string& form_id, std::size_t n_max);

// ---------------------------------------------------------------------------
// normalized coefficients
// ---------------------------------------------------------------------------

// lambda[n] = a(n) / n^((weight-1)/2); lambda[0] unused
struct Eigenform {
  std::string form_id;
  unsigned weight = 0;
  std::vector<double> lambda;

  std::size_t n_max() const { return lambda.empty() ? 0 : lambda.size() - 1; }
};

Eigenform normalize(const QExpansion& q);

// lambda(p^j) from lambda(p) by the three-term recursion
// lambda(p^(j+1)) = lambda(p) lambda(p^j) - lambda(p^(j-1))
double lambda_prime_power(double lambda_p, unsigned j);

// per-prime tables of lambda(p^j): table[p][j] = lambda(p^j), table[p][0] = 1
using PrimePowerTable = std::map<uint32_t, std::vector<double>>;

// lambda(n) for all n <= n_max from the prime-power table; throws
// missing_local_error if the table lacks a needed prime or depth
std::vector<double> extend_multiplicatively(const PrimePowerTable& table, std::size_t n_max,
                                            const FactorSieve& sieve);

// ---------------------------------------------------------------------------
// coefficient cache files
// ---------------------------------------------------------------------------
// line 1:  FUNCTORIA-CACHE v1 <form_id> <weight> <N>
// then one "n a(n)" row per coefficient, n = 1..N

void write_cache(const QExpansion& q, const std::string& path);

// validates the header, a(1) = 1, and a batch of Hecke spot checks;
// throws format_error on any mismatch
QExpansion read_cache(const std::string& path);

}  // namespace functoria
