#pragma once

#include <cstdint>
#include <vector>

#include "functoria/dirichlet.hpp"
#include "functoria/types.hpp"

namespace functoria {

// Dirichlet character modulo a prime q, indexed against the least primitive
// root g: chi_k(g^a) = e(ka/(q-1)).  Values at the four quarter angles are
// snapped to exact {1, i, -1, -i}.
struct DirichletCharacter {
  uint32_t q = 0;       // prime modulus
  uint32_t index = 0;   // k in 0..q-2; k = 0 is the principal character
  unsigned order = 1;   // multiplicative order = (q-1)/gcd(k, q-1)
  std::vector<cplx> values;  // size q; values[0] = 0

  cplx operator()(std::size_t n) const { return values[n % q]; }
  bool principal() const { return index == 0; }
};

// all q-1 characters mod q, index order; throws on non-prime modulus
std::vector<DirichletCharacter> characters_mod(uint32_t q);

// chi^j as a character (index k*j mod q-1); j = 0 gives the principal
// character, which vanishes on multiples of q
DirichletCharacter character_power(const DirichletCharacter& chi, unsigned j);

// b(n) = a(n) * chi^j(n)
CoeffSeq twist(const CoeffSeq& a, const DirichletCharacter& chi, unsigned j);

}  // namespace functoria
