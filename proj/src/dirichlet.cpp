#include "functoria/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace functoria {

LocalFactor local_coeffs(const ParamSet& params, uint32_t p, unsigned depth) {
  LocalFactor f;
  f.p = p;
  f.h.assign(depth + 1, cplx(0.0, 0.0));
  f.h[0] = 1.0;
  // multiply the truncated geometric series (1 - x t)^(-1) in place;
  // after all params, h[j] is the degree-j complete homogeneous polynomial
  for (const cplx& x : params.params)
    for (unsigned j = 1; j <= depth; ++j) f.h[j] += x * f.h[j - 1];
  return f;
}

CoeffSeq unit_seq(std::size_t n_max) {
  CoeffSeq s;
  s.a.assign(n_max + 1, cplx(0.0, 0.0));
  if (n_max >= 1) s.a[1] = 1.0;
  s.all_real = true;
  s.meta = "unit";
  return s;
}

CoeffSeq ones_seq(std::size_t n_max) {
  CoeffSeq s;
  s.a.assign(n_max + 1, cplx(1.0, 0.0));
  s.a[0] = 0.0;
  s.all_real = true;
  s.meta = "zeta";
  return s;
}

double max_imag(const CoeffSeq& a) {
  double m = 0.0;
  for (std::size_t n = 1; n < a.a.size(); ++n) m = std::max(m, std::abs(a.a[n].imag()));
  return m;
}

void realify(CoeffSeq& a, double tol) {
  // rounding residue scales with the coefficient, so judge it relative to
  // the magnitude (with a floor of 1 for small entries)
  double worst = 0.0;
  for (std::size_t n = 1; n < a.a.size(); ++n) {
    const double rel = std::abs(a.a[n].imag()) / std::max(1.0, std::abs(a.a[n].real()));
    worst = std::max(worst, rel);
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg << "series expected real has relative imaginary residue " << worst;
    throw format_error(msg.str());
  }
  for (auto& v : a.a) v = cplx(v.real(), 0.0);
  a.all_real = true;
}

CoeffSeq expand_multiplicative(const std::map<uint32_t, LocalFactor>& locals, std::size_t n_max,
                               const FactorSieve& sieve, std::string meta, bool expect_real) {
  if (sieve.n_max() < n_max) throw std::invalid_argument("factor sieve too small");
  CoeffSeq s;
  s.a.assign(n_max + 1, cplx(0.0, 0.0));
  s.meta = std::move(meta);
  if (n_max >= 1) s.a[1] = 1.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const uint32_t p = sieve.spf[n];
    std::size_t m = n;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    auto it = locals.find(p);
    if (it == locals.end())
      throw missing_local_error("no local factor at prime " + std::to_string(p));
    if (it->second.depth() < e)
      throw missing_local_error("local factor depth too small at prime " + std::to_string(p));
    s.a[n] = s.a[m] * it->second.h[e];
  }
  if (expect_real) realify(s);
  return s;
}

CoeffSeq expand_from_generator(const std::function<LocalFactor(uint32_t, unsigned)>& gen,
                               std::size_t n_max, const FactorSieve& sieve, std::string meta,
                               bool expect_real) {
  std::map<uint32_t, LocalFactor> locals;
  for (uint32_t p : sieve.primes()) {
    if (p > n_max) break;
    unsigned depth = 0;
    std::size_t pw = 1;
    while (pw <= n_max / p) {
      pw *= p;
      ++depth;
    }
    locals.emplace(p, gen(p, depth));
  }
  return expand_multiplicative(locals, n_max, sieve, std::move(meta), expect_real);
}

CoeffSeq convolve(const CoeffSeq& a, const CoeffSeq& b) {
  if (a.n_max() != b.n_max()) throw std::invalid_argument("convolve: length mismatch");
  const std::size_t N = a.n_max();
  CoeffSeq c;
  c.a.assign(N + 1, cplx(0.0, 0.0));
  c.all_real = a.all_real && b.all_real;
  c.meta = a.meta + "*" + b.meta;
  // scatter over d: each c(n) accumulates its divisor terms in increasing-d
  // order, which fixes the floating-point summation order
  for (std::size_t d = 1; d <= N; ++d) {
    const cplx ad = a.a[d];
    if (ad == cplx(0.0, 0.0)) continue;
    for (std::size_t n = d, e = 1; n <= N; n += d, ++e) c.a[n] += ad * b.a[e];
  }
  return c;
}

CoeffSeq divide(const CoeffSeq& a, const CoeffSeq& b) {
  if (a.n_max() != b.n_max()) throw std::invalid_argument("divide: length mismatch");
  const std::size_t N = a.n_max();
  if (N < 1 || b.a[1] == cplx(0.0, 0.0))
    throw std::domain_error("divide: divisor has b(1) = 0");
  CoeffSeq u;
  u.a = a.a;
  u.all_real = a.all_real && b.all_real;
  u.meta = a.meta + "/" + b.meta;
  // forward elimination: once u(d) is final, remove its contribution to all
  // multiples; equivalent to u(n) = (a(n) - sum_{d|n, d<n} u(d) b(n/d))/b(1)
  const cplx inv = cplx(1.0, 0.0) / b.a[1];
  for (std::size_t d = 1; d <= N; ++d) {
    u.a[d] *= inv;
    const cplx ud = u.a[d];
    if (ud == cplx(0.0, 0.0)) continue;
    for (std::size_t n = 2 * d, e = 2; n <= N; n += d, ++e) u.a[n] -= ud * b.a[e];
  }
  return u;
}

PartialEval evaluate_partial(const CoeffSeq& a, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("evaluate_partial: s must be positive");
  const std::size_t N = a.n_max();
  PartialEval out;
  cplx acc(0.0, 0.0);
  double tail = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    const double w = std::pow(double(n), -s);
    acc += a.a[n] * w;
    if (2 * n > N) tail += std::abs(a.a[n]) * w;
  }
  out.value = acc;
  out.tail_abs = tail;
  return out;
}

void write_coeff_csv(const CoeffSeq& a, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open csv for writing: " + path);
  os << "# meta: " << a.meta << '\n';
  os.precision(17);
  if (a.all_real) {
    os << "n,value_re\n";
    for (std::size_t n = 1; n <= a.n_max(); ++n) os << n << ',' << a.a[n].real() << '\n';
  } else {
    os << "n,value_re,value_im\n";
    for (std::size_t n = 1; n <= a.n_max(); ++n)
      os << n << ',' << a.a[n].real() << ',' << a.a[n].imag() << '\n';
  }
  if (!os) throw std::runtime_error("write failure on csv: " + path);
}

}  // namespace functoria
