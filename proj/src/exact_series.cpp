// Exact truncated power-series products over 256-bit integers.
//
// Strategy: reduce both factors modulo six 30-bit primes p = c*2^k + 1 with
// k >= 21, convolve each residue image with an iterative radix-2 NTT, and
// reconstruct the exact signed coefficients with mixed-radix CRT (Garner).
// The combined modulus M = prod p_i is ~2^179.  Reduction mod p of the true
// (cancelled) coefficient equals the computed cyclic convolution as long as
// no wraparound occurs, which the 2^21 transform size guarantees for inputs
// truncated to 2^20 entries.  Reconstruction recovers the true value as long
// as 2|value| < M; the largest coefficient the library ever produces is
// below 2^158, so the guard that rejects values within 2^8 of the modulus
// can only fire on internal errors, never on legitimate data.
//
// Every prime is re-verified at startup (Miller-Rabin, 2-adic valuation,
// primitive root found by trial against the factorization of p-1), so a
// typo in the table cannot produce silently wrong arithmetic.

#include "functoria/exact_series.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

#include "functoria/primes.hpp"

namespace functoria {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr int kMaxLog = 21;
constexpr int kNumPrimes = 6;
constexpr u32 kPrimes[kNumPrimes] = {
    998244353,  // 119 * 2^23 + 1
    985661441,  // 235 * 2^22 + 1
    975175681,  // 465 * 2^21 + 1
    962592769,  // 459 * 2^21 + 1
    943718401,  // 225 * 2^22 + 1
    935329793,  // 223 * 2^22 + 1
};

// Barrett reduction for a fixed 30-bit modulus; valid for products < 2^60
struct Barrett {
  u64 p = 0, inv = 0;
  void init(u64 p_) {
    p = p_;
    inv = static_cast<u64>((u128(1) << 64) / p_);
  }
  u64 mul(u64 a, u64 b) const {
    u64 t = a * b;  // < 2^60
    u64 q = static_cast<u64>((u128(t) * inv) >> 64);
    u64 r = t - q * p;
    if (r >= p) r -= p;
    return r;
  }
  u64 add(u64 a, u64 b) const {
    u64 r = a + b;
    return r >= p ? r - p : r;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 pow(u64 b, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
};

struct PrimePlan {
  u32 p = 0;
  u32 g = 0;  // primitive root
  Barrett br;
  // w_level[k] generates the order-2^k subgroup; w_inv_level[k] its inverse
  std::array<u64, kMaxLog + 1> w_level{}, w_inv_level{};
  // 2^32 and 2^64 mod p, for folding cpp_int limbs of either width
  u64 step32 = 0, step64 = 0;
};

u32 find_primitive_root(u32 p, const Barrett& br) {
  // factor p-1 by trial division (it is c * 2^k with small c)
  std::vector<u32> fac;
  u32 m = p - 1;
  for (u32 d = 2; static_cast<u64>(d) * d <= m; ++d) {
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) fac.push_back(m);
  for (u32 g = 2;; ++g) {
    bool ok = true;
    for (u32 q : fac)
      if (br.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

struct CrtPlan {
  std::array<PrimePlan, kNumPrimes> plan;
  // inv_p[i][j] = p_i^{-1} mod p_j for i < j
  u64 inv_p[kNumPrimes][kNumPrimes] = {};
  Int256 modulus = 1, half_modulus = 0, guard = 0;

  CrtPlan() {
    for (int i = 0; i < kNumPrimes; ++i) {
      PrimePlan& pl = plan[i];
      pl.p = kPrimes[i];
      if (!is_prime_u32(pl.p)) throw std::logic_error("exact_series: modulus not prime");
      if ((pl.p - 1) % (u32(1) << kMaxLog) != 0)
        throw std::logic_error("exact_series: modulus lacks 2^21 roots of unity");
      pl.br.init(pl.p);
      pl.g = find_primitive_root(pl.p, pl.br);
      u64 w = pl.br.pow(pl.g, (pl.p - 1) >> kMaxLog);
      if (pl.br.pow(w, u64(1) << (kMaxLog - 1)) == 1)
        throw std::logic_error("exact_series: root of unity has short order");
      for (int k = kMaxLog; k >= 0; --k) {
        pl.w_level[k] = w;
        pl.w_inv_level[k] = pl.br.pow(w, pl.p - 2);
        w = pl.br.mul(w, w);
      }
      pl.step32 = pl.br.pow(2, 32);
      pl.step64 = pl.br.mul(pl.step32, pl.step32);
      modulus *= pl.p;
    }
    for (int i = 0; i < kNumPrimes; ++i)
      for (int j = i + 1; j < kNumPrimes; ++j)
        inv_p[i][j] = plan[j].br.pow(kPrimes[i] % kPrimes[j], kPrimes[j] - 2);
    half_modulus = modulus >> 1;
    guard = modulus >> 8;
  }
};

const CrtPlan& crt() {
  static const CrtPlan instance;
  return instance;
}

void ntt(std::vector<u64>& a, bool inverse, const PrimePlan& pl) {
  const std::size_t n = a.size();
  const Barrett& br = pl.br;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  int level = 1;
  for (std::size_t len = 2; len <= n; len <<= 1, ++level) {
    const u64 wl = inverse ? pl.w_inv_level[level] : pl.w_level[level];
    for (std::size_t i = 0; i < n; i += len) {
      u64 w = 1;
      for (std::size_t k = i; k < i + len / 2; ++k) {
        u64 u = a[k], v = br.mul(a[k + len / 2], w);
        a[k] = br.add(u, v);
        a[k + len / 2] = br.sub(u, v);
        w = br.mul(w, wl);
      }
    }
  }
  if (inverse) {
    u64 ninv = br.pow(n % pl.p, pl.p - 2);
    for (auto& x : a) x = br.mul(x, ninv);
  }
}

// fold the magnitude limbs of an int256 mod p; handles sign
u64 reduce_int256(const Int256& x, const PrimePlan& pl) {
  const auto& backend = x.backend();
  const auto* limbs = backend.limbs();
  constexpr unsigned limb_bits = sizeof(limbs[0]) * 8;
  static_assert(limb_bits == 32 || limb_bits == 64, "unexpected cpp_int limb width");
  const u64 step = (limb_bits == 64) ? pl.step64 : pl.step32;
  u64 r = 0;
  for (unsigned i = backend.size(); i-- > 0;) {
    u64 lo = static_cast<u64>(limbs[i]) % pl.p;
    r = pl.br.add(pl.br.mul(r, step), lo);
  }
  if (backend.sign() && r != 0) r = pl.p - r;
  return r;
}

std::vector<u64> reduce_vec(const std::vector<Int256>& a, std::size_t take, std::size_t size,
                            const PrimePlan& pl) {
  std::vector<u64> out(size, 0);
  for (std::size_t i = 0; i < take; ++i) out[i] = reduce_int256(a[i], pl);
  return out;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t s = 1;
  while (s < n) s <<= 1;
  return s;
}

// mixed-radix reconstruction of one coefficient from its six residues
Int256 garner(const std::array<u64, kNumPrimes>& residue, const CrtPlan& c) {
  std::array<u64, kNumPrimes> v = residue;
  for (int i = 0; i < kNumPrimes; ++i)
    for (int j = i + 1; j < kNumPrimes; ++j)
      v[j] = c.plan[j].br.mul(c.plan[j].br.sub(v[j], v[i] % c.plan[j].p), c.inv_p[i][j]);
  Int256 x = v[kNumPrimes - 1];
  for (int i = kNumPrimes - 2; i >= 0; --i) {
    x *= kPrimes[i];
    x += v[i];
  }
  if (x > c.half_modulus) x -= c.modulus;
  if (x > c.guard || -x > c.guard)
    throw capacity_error("series arithmetic: reconstructed coefficient too close to CRT modulus");
  return x;
}

std::vector<Int256> garner_vec(const std::array<std::vector<u64>, kNumPrimes>& residues,
                               std::size_t out_len) {
  const CrtPlan& c = crt();
  std::vector<Int256> out(out_len);
  std::array<u64, kNumPrimes> r{};
  for (std::size_t n = 0; n < out_len; ++n) {
    for (int i = 0; i < kNumPrimes; ++i) r[i] = residues[i][n];
    out[n] = garner(r, c);
  }
  return out;
}

void check_out_len(std::size_t out_len) {
  if (out_len == 0) throw std::invalid_argument("series arithmetic: out_len must be >= 1");
  if (out_len > kMaxSeriesLen)
    throw capacity_error("series arithmetic: truncation length exceeds certified capacity");
}

// the direct paths compute exactly in Int256; enforce the same bound the CRT
// path guarantees so callers see one capacity contract regardless of route
void check_capacity(const std::vector<Int256>& out) {
  const CrtPlan& c = crt();
  for (const Int256& x : out)
    if (x > c.guard || -x > c.guard)
      throw capacity_error("series arithmetic: coefficient exceeds certified capacity");
}

std::vector<Int256> naive_multiply(const std::vector<Int256>& a, const std::vector<Int256>& b,
                                   std::size_t ea, std::size_t eb, std::size_t out_len) {
  std::vector<Int256> out(out_len, 0);
  for (std::size_t i = 0; i < ea; ++i) {
    if (a[i] == 0) continue;
    const std::size_t jmax = std::min(eb, out_len - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
  }
  check_capacity(out);
  return out;
}

}  // namespace

std::vector<Int256> series_multiply(const std::vector<Int256>& a, const std::vector<Int256>& b,
                                    std::size_t out_len) {
  check_out_len(out_len);
  std::size_t ea = std::min(a.size(), out_len), eb = std::min(b.size(), out_len);
  while (ea > 0 && a[ea - 1] == 0) --ea;
  while (eb > 0 && b[eb - 1] == 0) --eb;
  if (ea == 0 || eb == 0) return std::vector<Int256>(out_len, 0);
  if (ea * eb <= (std::size_t(1) << 14)) return naive_multiply(a, b, ea, eb, out_len);

  // sparse support (theta-like series): convolve nonzero pairs directly
  {
    std::size_t na = 0, nb = 0;
    for (std::size_t i = 0; i < ea; ++i) na += (a[i] != 0);
    for (std::size_t j = 0; j < eb; ++j) nb += (b[j] != 0);
    if (na * nb <= (std::size_t(1) << 22)) {
      std::vector<std::size_t> ia, jb;
      ia.reserve(na);
      jb.reserve(nb);
      for (std::size_t i = 0; i < ea; ++i)
        if (a[i] != 0) ia.push_back(i);
      for (std::size_t j = 0; j < eb; ++j)
        if (b[j] != 0) jb.push_back(j);
      std::vector<Int256> out(out_len, 0);
      for (std::size_t i : ia) {
        for (std::size_t j : jb) {
          if (i + j >= out_len) break;
          out[i + j] += a[i] * b[j];
        }
      }
      check_capacity(out);
      return out;
    }
  }

  const CrtPlan& c = crt();
  const std::size_t size = next_pow2(ea + eb - 1);
  const bool square = (&a == &b) && ea == eb;
  std::array<std::vector<u64>, kNumPrimes> residues;
  for (int i = 0; i < kNumPrimes; ++i) {
    const PrimePlan& pl = c.plan[i];
    std::vector<u64> fa = reduce_vec(a, ea, size, pl);
    ntt(fa, false, pl);
    if (square) {
      for (auto& x : fa) x = pl.br.mul(x, x);
    } else {
      std::vector<u64> fb = reduce_vec(b, eb, size, pl);
      ntt(fb, false, pl);
      for (std::size_t k = 0; k < size; ++k) fa[k] = pl.br.mul(fa[k], fb[k]);
    }
    ntt(fa, true, pl);
    fa.resize(out_len);
    residues[i] = std::move(fa);
  }
  return garner_vec(residues, out_len);
}

std::vector<Int256> series_power(const std::vector<Int256>& base, unsigned exponent,
                                 std::size_t out_len) {
  check_out_len(out_len);
  if (exponent == 0) throw std::invalid_argument("series_power: exponent must be >= 1");
  const std::size_t eb = std::min(base.size(), out_len);
  if (eb == 0) return std::vector<Int256>(out_len, 0);

  // small cases fall back to repeated naive products
  if (eb * eb <= (std::size_t(1) << 14)) {
    std::vector<Int256> acc(1, Int256(1)), cur(base.begin(), base.begin() + eb);
    unsigned e = exponent;
    while (true) {
      if (e & 1) acc = series_multiply(acc, cur, out_len);
      e >>= 1;
      if (!e) break;
      cur = series_multiply(cur, cur, out_len);
    }
    acc.resize(out_len, 0);
    return acc;
  }

  // big case: run the whole square-and-multiply chain per residue field and
  // reconstruct once at the end; truncation commutes with reduction mod p
  const CrtPlan& c = crt();
  const std::size_t size = next_pow2(2 * out_len);
  std::array<std::vector<u64>, kNumPrimes> residues;
  for (int i = 0; i < kNumPrimes; ++i) {
    const PrimePlan& pl = c.plan[i];
    std::vector<u64> cur = reduce_vec(base, eb, size, pl);
    std::size_t cur_len = eb;
    std::vector<u64> acc;  // empty = multiplicative identity
    std::size_t acc_len = 1;
    unsigned e = exponent;
    auto product = [&](std::vector<u64>& x, std::size_t xl, std::vector<u64>& y, std::size_t yl,
                       bool is_square) {
      const std::size_t need = next_pow2(std::min(xl + yl - 1, out_len + out_len));
      x.resize(need);
      std::fill(x.begin() + static_cast<std::ptrdiff_t>(xl), x.end(), 0);
      ntt(x, false, pl);
      if (is_square) {
        for (auto& t : x) t = pl.br.mul(t, t);
      } else {
        y.resize(need);
        std::fill(y.begin() + static_cast<std::ptrdiff_t>(yl), y.end(), 0);
        ntt(y, false, pl);
        for (std::size_t k = 0; k < need; ++k) x[k] = pl.br.mul(x[k], y[k]);
      }
      ntt(x, true, pl);
      std::size_t len = std::min(xl + yl - 1, out_len);
      x.resize(len);
      return len;
    };
    while (true) {
      if (e & 1) {
        if (acc.empty()) {
          acc.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(cur_len));
          acc_len = cur_len;
        } else {
          std::vector<u64> tmp = cur;
          acc_len = product(acc, acc_len, tmp, cur_len, false);
        }
      }
      e >>= 1;
      if (!e) break;
      std::vector<u64> dummy;
      cur_len = product(cur, cur_len, dummy, cur_len, true);
    }
    acc.resize(out_len, 0);
    residues[i] = std::move(acc);
  }
  return garner_vec(residues, out_len);
}

}  // namespace functoria
