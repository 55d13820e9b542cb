#include "functoria/characters.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "functoria/primes.hpp"

namespace functoria {

namespace {

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

uint32_t least_primitive_root(uint32_t q) {
  std::vector<uint32_t> fac;
  uint32_t m = q - 1;
  for (uint32_t d = 2; uint64_t(d) * d <= m; ++d) {
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) fac.push_back(m);
  for (uint32_t g = 1;; ++g) {
    bool ok = true;
    for (uint32_t f : fac)
      if (pow_mod(g, (q - 1) / f, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

// e(num/den) with the four quarter angles snapped exactly
cplx root_of_unity(uint64_t num, uint64_t den) {
  num %= den;
  if (4 * num % den == 0) {
    switch (4 * num / den) {
      case 0: return cplx(1.0, 0.0);
      case 1: return cplx(0.0, 1.0);
      case 2: return cplx(-1.0, 0.0);
      default: return cplx(0.0, -1.0);
    }
  }
  const double t = 2.0 * M_PI * double(num) / double(den);
  return cplx(std::cos(t), std::sin(t));
}

DirichletCharacter make_character(uint32_t q, uint32_t g, uint32_t k) {
  DirichletCharacter chi;
  chi.q = q;
  chi.index = k;
  chi.order = (q - 1) / std::gcd<uint64_t>(k, q - 1);
  chi.values.assign(q, cplx(0.0, 0.0));
  uint64_t residue = 1;
  for (uint32_t a = 0; a < q - 1; ++a) {
    chi.values[residue] = root_of_unity(uint64_t(k) * a, q - 1);
    residue = residue * g % q;
  }
  return chi;
}

}  // namespace

std::vector<DirichletCharacter> characters_mod(uint32_t q) {
  if (q < 3 || !is_prime_u32(q))
    throw std::invalid_argument("characters: modulus must be an odd prime");
  const uint32_t g = least_primitive_root(q);
  std::vector<DirichletCharacter> out;
  out.reserve(q - 1);
  for (uint32_t k = 0; k < q - 1; ++k) out.push_back(make_character(q, g, k));
  return out;
}

DirichletCharacter character_power(const DirichletCharacter& chi, unsigned j) {
  const uint32_t g = least_primitive_root(chi.q);
  const uint32_t k = uint32_t((uint64_t(chi.index) * j) % (chi.q - 1));
  return make_character(chi.q, g, k);
}

CoeffSeq twist(const CoeffSeq& a, const DirichletCharacter& chi, unsigned j) {
  const DirichletCharacter pw = character_power(chi, j);
  CoeffSeq out;
  out.a.assign(a.a.size(), cplx(0.0, 0.0));
  out.meta = a.meta + "@chi" + std::to_string(pw.index);
  bool real_values = true;
  for (std::size_t n = 1; n < a.a.size(); ++n) {
    const cplx v = pw.values[n % pw.q];
    if (v.imag() != 0.0) real_values = false;
    out.a[n] = a.a[n] * v;
  }
  out.all_real = a.all_real && real_values;
  return out;
}

}  // namespace functoria
