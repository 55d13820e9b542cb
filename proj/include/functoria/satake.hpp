#pragma once

#include <string>
#include <vector>

#include "functoria/types.hpp"

namespace functoria {

// local parameters at an unramified prime: the roots of X^2 - lambda X + 1,
// listed with the nonnegative-imaginary (then larger-real) root first
struct SatakePair {
  cplx alpha;
  cplx beta;
};

SatakePair satake_from_lambda(double lambda_p);

// multiset of local parameters of a lifted representation, kept sorted by
// (real, imaginary) so multiset comparisons are plain array comparisons
struct ParamSet {
  std::vector<cplx> params;
  std::string label;  // sym_m / rs / tensor / ext_square / zeta

  std::size_t degree() const { return params.size(); }
};

ParamSet zeta_params();

// { alpha^(m-i) beta^i : 0 <= i <= m }, degree m+1; m in 1..4
ParamSet sym_power_params(const SatakePair& s, unsigned m);

// { x * conj(y) : x in P, y in Q }, degree |P| |Q|
ParamSet rankin_selberg_params(const ParamSet& P, const ParamSet& Q);

// { x * y : x in P, y in Q }, no conjugation
ParamSet tensor_params(const ParamSet& P, const ParamSet& Q);

// the six pairwise products of distinct elements of {ac, ad, bc, bd};
// with ab = cd = 1 this is the multiset {a^2, b^2, c^2, d^2, 1, 1}
ParamSet exterior_square_gl4(const SatakePair& s1, const SatakePair& s2);

}  // namespace functoria
