#include "functoria/lifts.hpp"

#include <cmath>
#include <stdexcept>

#include "functoria/satake.hpp"

namespace functoria {

namespace {

void check_range(const Eigenform& f, std::size_t n_max) {
  if (f.n_max() < n_max)
    throw std::invalid_argument("eigenform coefficients shorter than requested range");
}

void check_m(unsigned m) {
  if (m < 2 || m > 4) throw std::invalid_argument("symmetric power m must be in 2..4");
}

// lambda(n^k) for all n <= n_max, from the prime-power recursion
std::vector<double> lambda_power_arg(const Eigenform& f, unsigned k, std::size_t n_max,
                                     const FactorSieve& sieve) {
  PrimePowerTable table;
  for (uint32_t p : sieve.primes()) {
    if (p > n_max) break;
    unsigned depth = 0;
    std::size_t pw = 1;
    while (pw <= n_max / p) {
      pw *= p;
      ++depth;
    }
    std::vector<double> row(depth + 1);
    for (unsigned j = 0; j <= depth; ++j) row[j] = lambda_prime_power(f.lambda[p], k * j);
    table.emplace(p, std::move(row));
  }
  return extend_multiplicatively(table, n_max, sieve);
}

CoeffSeq seq_from_real(std::vector<double> v, std::string meta) {
  CoeffSeq s;
  s.a.assign(v.size(), cplx(0.0, 0.0));
  for (std::size_t n = 1; n < v.size(); ++n) s.a[n] = v[n];
  s.all_real = true;
  s.meta = std::move(meta);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// symmetric-power squares
// ---------------------------------------------------------------------------

CoeffSeq series_Lm(const Eigenform& f, unsigned m, std::size_t n_max, const FactorSieve& sieve) {
  check_m(m);
  check_range(f, n_max);
  auto gen = [&](uint32_t p, unsigned depth) {
    LocalFactor lf;
    lf.p = p;
    lf.h.resize(depth + 1);
    for (unsigned j = 0; j <= depth; ++j) {
      const double v = lambda_prime_power(f.lambda[p], m * j);
      lf.h[j] = v * v;
    }
    return lf;
  };
  return expand_from_generator(gen, n_max, sieve, "L" + std::to_string(m) + "." + f.form_id,
                               true);
}

CoeffSeq series_RS_symm(const Eigenform& f, unsigned m, std::size_t n_max,
                        const FactorSieve& sieve) {
  check_m(m);
  check_range(f, n_max);
  auto gen = [&](uint32_t p, unsigned depth) {
    const SatakePair s = satake_from_lambda(f.lambda[p]);
    const ParamSet sym = sym_power_params(s, m);
    return local_coeffs(rankin_selberg_params(sym, sym), p, depth);
  };
  return expand_from_generator(gen, n_max, sieve,
                               "RSsym" + std::to_string(m) + "." + f.form_id, true);
}

CoeffSeq correction_Um(const Eigenform& f, unsigned m, std::size_t n_max,
                       const FactorSieve& sieve) {
  CoeffSeq u = divide(series_Lm(f, m, n_max, sieve), series_RS_symm(f, m, n_max, sieve));
  u.meta = "U" + std::to_string(m) + "." + f.form_id;
  return u;
}

CoeffSeq series_sym_power(const Eigenform& f, unsigned m, std::size_t n_max,
                          const FactorSieve& sieve) {
  if (m < 1 || m > 4) throw std::invalid_argument("symmetric power m must be in 1..4");
  check_range(f, n_max);
  auto gen = [&](uint32_t p, unsigned depth) {
    const SatakePair s = satake_from_lambda(f.lambda[p]);
    return local_coeffs(sym_power_params(s, m), p, depth);
  };
  return expand_from_generator(gen, n_max, sieve,
                               "sym" + std::to_string(m) + "." + f.form_id, true);
}

// ---------------------------------------------------------------------------
// mixed two-form constructions
// ---------------------------------------------------------------------------

CoeffSeq series_L12(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                    const FactorSieve& sieve) {
  check_range(f1, n_max);
  check_range(f2, n_max);
  const std::vector<double> l2sq = lambda_power_arg(f2, 2, n_max, sieve);
  CoeffSeq s;
  s.a.assign(n_max + 1, cplx(0.0, 0.0));
  for (std::size_t n = 1; n <= n_max; ++n)
    s.a[n] = (f1.lambda[n] * f1.lambda[n]) * (l2sq[n] * l2sq[n]);
  s.all_real = true;
  s.meta = "L12." + f1.form_id + "." + f2.form_id;
  return s;
}

CoeffSeq series_RS12(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                     const FactorSieve& sieve) {
  check_range(f1, n_max);
  check_range(f2, n_max);
  auto gen = [&](uint32_t p, unsigned depth) {
    const SatakePair s1 = satake_from_lambda(f1.lambda[p]);
    const SatakePair s2 = satake_from_lambda(f2.lambda[p]);
    const ParamSet mixed = tensor_params(sym_power_params(s1, 1), sym_power_params(s2, 2));
    return local_coeffs(rankin_selberg_params(mixed, mixed), p, depth);
  };
  return expand_from_generator(gen, n_max, sieve, "RS12." + f1.form_id + "." + f2.form_id,
                               true);
}

CoeffSeq correction_V12(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                        const FactorSieve& sieve) {
  CoeffSeq v = divide(series_L12(f1, f2, n_max, sieve), series_RS12(f1, f2, n_max, sieve));
  v.meta = "V12." + f1.form_id + "." + f2.form_id;
  return v;
}

CoeffSeq series_L11(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                    const FactorSieve& sieve) {
  check_range(f1, n_max);
  check_range(f2, n_max);
  (void)sieve;
  CoeffSeq s;
  s.a.assign(n_max + 1, cplx(0.0, 0.0));
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double v = f1.lambda[n] * f2.lambda[n];
    s.a[n] = v * v;
  }
  s.all_real = true;
  s.meta = "L11." + f1.form_id + "." + f2.form_id;
  return s;
}

CoeffSeq series_RS11(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                     const FactorSieve& sieve) {
  check_range(f1, n_max);
  check_range(f2, n_max);
  auto gen = [&](uint32_t p, unsigned depth) {
    const SatakePair s1 = satake_from_lambda(f1.lambda[p]);
    const SatakePair s2 = satake_from_lambda(f2.lambda[p]);
    const ParamSet mixed = tensor_params(sym_power_params(s1, 1), sym_power_params(s2, 1));
    return local_coeffs(rankin_selberg_params(mixed, mixed), p, depth);
  };
  return expand_from_generator(gen, n_max, sieve, "RS11." + f1.form_id + "." + f2.form_id,
                               true);
}

CoeffSeq correction_V11(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                        const FactorSieve& sieve) {
  CoeffSeq v = divide(series_L11(f1, f2, n_max, sieve), series_RS11(f1, f2, n_max, sieve));
  v.meta = "V11." + f1.form_id + "." + f2.form_id;
  return v;
}

// ---------------------------------------------------------------------------
// exterior-square four-fold product
// ---------------------------------------------------------------------------

CoeffSeq series_wedge(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                      const FactorSieve& sieve) {
  check_range(f1, n_max);
  check_range(f2, n_max);
  const std::vector<double> l1 = lambda_power_arg(f1, 2, n_max, sieve);
  const std::vector<double> l2 = lambda_power_arg(f2, 2, n_max, sieve);
  std::vector<double> a(n_max + 1), b(n_max + 1), d(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    a[n] = l1[n] * l1[n];
    b[n] = l1[n] * l2[n];  // self-dual forms: the conjugate factor collapses
    d[n] = l2[n] * l2[n];
  }
  CoeffSeq left = convolve(seq_from_real(a, "w.a"), seq_from_real(b, "w.b"));
  CoeffSeq right = convolve(seq_from_real(b, "w.c"), seq_from_real(d, "w.d"));
  CoeffSeq w = convolve(left, right);
  w.meta = "wedge." + f1.form_id + "." + f2.form_id;
  return w;
}

CoeffSeq series_wedge_rs_route(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                               const FactorSieve& sieve) {
  check_range(f1, n_max);
  check_range(f2, n_max);
  auto rs_pair = [&](const Eigenform& fi, const Eigenform& fj) {
    auto gen = [&](uint32_t p, unsigned depth) {
      const ParamSet pi = sym_power_params(satake_from_lambda(fi.lambda[p]), 2);
      const ParamSet pj = sym_power_params(satake_from_lambda(fj.lambda[p]), 2);
      return local_coeffs(rankin_selberg_params(pi, pj), p, depth);
    };
    return expand_from_generator(gen, n_max, sieve,
                                 "RS.sym2" + fi.form_id + ".sym2" + fj.form_id, true);
  };
  CoeffSeq w = convolve(convolve(rs_pair(f1, f1), rs_pair(f1, f2)),
                        convolve(rs_pair(f2, f1), rs_pair(f2, f2)));
  w.meta = "wedge_rs." + f1.form_id + "." + f2.form_id;
  return w;
}

CoeffSeq series_wedge_param_route(const Eigenform& f1, const Eigenform& f2, std::size_t n_max,
                                  const FactorSieve& sieve) {
  check_range(f1, n_max);
  check_range(f2, n_max);
  auto gen = [&](uint32_t p, unsigned depth) {
    const SatakePair s1 = satake_from_lambda(f1.lambda[p]);
    const SatakePair s2 = satake_from_lambda(f2.lambda[p]);
    const ParamSet phi = exterior_square_gl4(s1, s2);
    return local_coeffs(rankin_selberg_params(phi, phi), p, depth);
  };
  CoeffSeq w = expand_from_generator(gen, n_max, sieve, "", true);
  w.meta = "wedge_param." + f1.form_id + "." + f2.form_id;
  return w;
}

// ---------------------------------------------------------------------------
// base change
// ---------------------------------------------------------------------------

CoeffSeq series_base_change(const Eigenform& f, uint32_t ell, const DirichletCharacter& chi,
                            std::size_t n_max, const FactorSieve& sieve) {
  check_range(f, n_max);
  if (ell < 3 || !is_prime_u32(ell))
    throw std::invalid_argument("base change degree must be an odd prime");
  if (chi.q != ell) throw std::invalid_argument("character modulus does not match the degree");
  if (chi.principal()) throw std::invalid_argument("base change needs a nontrivial character");
  (void)sieve;
  std::vector<double> sq(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) sq[n] = f.lambda[n] * f.lambda[n];
  const CoeffSeq base = seq_from_real(std::move(sq), "lam_sq." + f.form_id);
  CoeffSeq block = twist(base, chi, 0);
  for (unsigned j = 1; j < ell; ++j) block = convolve(block, twist(base, chi, j));
  CoeffSeq out = block;
  for (unsigned i = 1; i < ell; ++i) out = convolve(out, block);
  out.meta = "basechange" + std::to_string(ell) + ".chi" + std::to_string(chi.index) + "." +
             f.form_id;
  // the twist exponents {j mod order} form a conjugation-closed multiset, so
  // the product is real up to rounding; callers assert with max_imag/realify
  return out;
}

// ---------------------------------------------------------------------------
// fourth-moment diagnostic
// ---------------------------------------------------------------------------

MomentReport check_sym4_moment_bound(const Eigenform& f, double sigma, std::size_t n_max,
                                     const FactorSieve& sieve) {
  if (!(sigma > 1.0)) throw std::invalid_argument("moment check needs sigma > 1");
  check_range(f, n_max);
  MomentReport rep;
  rep.sigma = sigma;
  double prod = 1.0;
  uint64_t cut = 2;
  std::vector<std::pair<uint64_t, double>> raw;  // (cutoff, value) before trailing point
  for (uint32_t p : sieve.primes()) {
    if (p > n_max) break;
    while (p > cut) {
      raw.emplace_back(cut, prod);
      cut *= 2;
    }
    const SatakePair s = satake_from_lambda(f.lambda[p]);
    const double a8 = std::pow(std::abs(s.alpha), 8.0);
    const double b8 = std::pow(std::abs(s.beta), 8.0);
    rep.max_term_deviation = std::max(rep.max_term_deviation, std::abs(a8 + b8 - 2.0));
    prod *= 1.0 + (a8 + b8) * std::pow(double(p), -sigma);
  }
  raw.emplace_back(n_max, prod);
  for (const auto& [x, v] : raw) rep.checkpoints.push_back({x, v});
  // last full dyadic step strictly inside the range
  if (raw.size() >= 3) {
    const double v2 = raw[raw.size() - 2].second;
    const double v1 = raw[raw.size() - 3].second;
    rep.last_increment_abs = v2 - v1;
    rep.last_increment_log = std::log(v2) - std::log(v1);
  }
  return rep;
}

}  // namespace functoria
