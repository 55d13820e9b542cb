#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace functoria {

// smallest-prime-factor sieve, shared by every multiplicative expansion
struct FactorSieve {
  std::vector<std::uint32_t> spf;  // spf[n] = least prime factor of n, spf[1] = 1

  explicit FactorSieve(std::size_t n_max);

  std::size_t n_max() const { return spf.size() - 1; }
  bool is_prime(std::uint32_t n) const { return n >= 2 && spf[n] == n; }

  // (prime, exponent) pairs, increasing prime order
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factor(std::uint32_t n) const;

  std::vector<std::uint32_t> primes() const;
};

// deterministic Miller-Rabin, valid for all 32-bit inputs
bool is_prime_u32(std::uint32_t n);

}  // namespace functoria
