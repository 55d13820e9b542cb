#include "functoria/satake.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace functoria {

namespace {

bool param_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void sort_params(ParamSet& s) { std::sort(s.params.begin(), s.params.end(), param_less); }

}  // namespace

SatakePair satake_from_lambda(double lambda_p) {
  if (!std::isfinite(lambda_p)) throw std::invalid_argument("satake: lambda must be finite");
  const double half = lambda_p / 2.0;
  const double disc = 1.0 - half * half;
  SatakePair s;
  if (disc >= 0.0) {
    // conjugate pair on the unit circle, nonnegative-imaginary root first
    s.alpha = cplx(half, std::sqrt(disc));
    s.beta = std::conj(s.alpha);
  } else {
    // real roots r and 1/r (only reachable past the tempered range)
    const double root = half + std::copysign(std::sqrt(-disc), half);
    s.alpha = cplx(std::max(root, 1.0 / root), 0.0);
    s.beta = cplx(std::min(root, 1.0 / root), 0.0);
  }
  return s;
}

ParamSet zeta_params() {
  ParamSet s;
  s.params = {cplx(1.0, 0.0)};
  s.label = "zeta";
  return s;
}

ParamSet sym_power_params(const SatakePair& s, unsigned m) {
  if (m < 1 || m > 4) throw std::invalid_argument("sym power: m must be in 1..4");
  ParamSet out;
  out.params.reserve(m + 1);
  for (unsigned i = 0; i <= m; ++i) {
    cplx v(1.0, 0.0);
    for (unsigned k = 0; k < m - i; ++k) v *= s.alpha;
    for (unsigned k = 0; k < i; ++k) v *= s.beta;
    out.params.push_back(v);
  }
  out.label = "sym_" + std::to_string(m);
  sort_params(out);
  return out;
}

ParamSet rankin_selberg_params(const ParamSet& P, const ParamSet& Q) {
  ParamSet out;
  out.params.reserve(P.degree() * Q.degree());
  for (const cplx& x : P.params)
    for (const cplx& y : Q.params) out.params.push_back(x * std::conj(y));
  out.label = "rs";
  sort_params(out);
  return out;
}

ParamSet tensor_params(const ParamSet& P, const ParamSet& Q) {
  ParamSet out;
  out.params.reserve(P.degree() * Q.degree());
  for (const cplx& x : P.params)
    for (const cplx& y : Q.params) out.params.push_back(x * y);
  out.label = "tensor";
  sort_params(out);
  return out;
}

ParamSet exterior_square_gl4(const SatakePair& s1, const SatakePair& s2) {
  const cplx base[4] = {s1.alpha * s2.alpha, s1.alpha * s2.beta, s1.beta * s2.alpha,
                        s1.beta * s2.beta};
  ParamSet out;
  out.params.reserve(6);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out.params.push_back(base[i] * base[j]);
  out.label = "ext_square";
  sort_params(out);
  return out;
}

}  // namespace functoria
