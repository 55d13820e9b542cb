#include "functoria/primes.hpp"

#include <stdexcept>

namespace functoria {

FactorSieve::FactorSieve(std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("FactorSieve: n_max must be >= 1");
  spf.assign(n_max + 1, 0);
  spf[1] = 1;
  for (std::size_t i = 2; i <= n_max; ++i) {
    if (spf[i] == 0) {
      for (std::size_t j = i; j <= n_max; j += i)
        if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FactorSieve::factor(std::uint32_t n) const {
  if (n == 0 || n > n_max()) throw std::out_of_range("FactorSieve::factor: n out of range");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  while (n > 1) {
    std::uint32_t p = spf[n], e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::uint32_t> FactorSieve::primes() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 2; n <= n_max(); ++n)
    if (spf[n] == n) out.push_back(n);
  return out;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    if (n % p == 0) return n == p;
  std::uint32_t d = n - 1;
  int r = 0;
  while (d % 2 == 0) d /= 2, ++r;
  // bases {2, 7, 61} decide primality for every n < 4'759'123'141
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    std::uint64_t x = 1, b = a % n, e = d;
    if (b == 0) continue;  // n = 61 itself: the base carries no information
    while (e) {
      if (e & 1) x = x * b % n;
      b = b * b % n;
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace functoria
