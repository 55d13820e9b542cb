#include "functoria/eigenforms.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "functoria/exact_series.hpp"

namespace functoria {

namespace {

// sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2); its 8th power is the weight-12
// eta product with the leading q stripped
std::vector<Int256> jacobi_cube(std::size_t len) {
  std::vector<Int256> c(len, 0);
  for (std::size_t k = 0;; ++k) {
    std::size_t idx = k * (k + 1) / 2;
    if (idx >= len) break;
    long long v = static_cast<long long>(2 * k + 1);
    c[idx] = (k & 1) ? Int256(-v) : Int256(v);
  }
  return c;
}

// tau(n) = coefficient of q^(n-1) in (jacobi cube)^8; cached because several
// pipelines want the same expansion in one process.  Snapshot semantics: a
// grow replaces the shared vector, it never reallocates under a reader.
std::shared_ptr<const std::vector<Int256>> delta_shifted(std::size_t len) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<Int256>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache || cache->size() < len) {
    std::vector<Int256> c3 = jacobi_cube(len);
    // square sparsely first (support ~ sqrt(len)), then one power chain
    std::vector<Int256> c6 = series_multiply(c3, c3, len);
    cache = std::make_shared<const std::vector<Int256>>(series_power(c6, 4, len));
  }
  return cache;
}

void check_len(std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("eigenforms: n_max must be >= 1");
  if (n_max > kMaxSeriesLen)
    throw capacity_error("eigenforms: n_max exceeds certified sieve capacity");
}

}  // namespace

QExpansion sieve_delta(std::size_t n_max) {
  check_len(n_max);
  auto d = delta_shifted(n_max);
  QExpansion q;
  q.form_id = "delta12";
  q.weight = 12;
  q.a.assign(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) q.a[n] = (*d)[n - 1];
  return q;
}

QExpansion build_weight16(std::size_t n_max) {
  check_len(n_max);
  // E4 coefficients by a divisor sweep: e[m] = 240 sigma_3(m), e[0] = 1
  std::vector<Int256> e(n_max, 0);
  e[0] = 1;
  for (std::size_t d = 1; d < n_max; ++d) {
    const Int256 cube = Int256(240) * d * d * d;
    for (std::size_t m = d; m < n_max; m += d) e[m] += cube;
  }
  const std::vector<Int256> prod = series_multiply(e, *delta_shifted(n_max), n_max);
  QExpansion q;
  q.form_id = "e4delta16";
  q.weight = 16;
  q.a.assign(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) q.a[n] = prod[n - 1];
  return q;
}

QExpansion build_form(const std::string& form_id, std::size_t n_max) {
  if (form_id == "delta12") return sieve_delta(n_max);
  if (form_id == "e4delta16") return build_weight16(n_max);
  throw std::invalid_argument("unknown form id: " + form_id);
}

Eigenform normalize(const QExpansion& q) {
  Eigenform f;
  f.form_id = q.form_id;
  f.weight = q.weight;
  f.lambda.assign(q.a.size(), 0.0);
  const double half = (q.weight - 1) / 2.0;
  for (std::size_t n = 1; n < q.a.size(); ++n)
    f.lambda[n] = q.a[n].convert_to<double>() / std::pow(double(n), half);
  return f;
}

double lambda_prime_power(double lambda_p, unsigned j) {
  if (j == 0) return 1.0;
  double prev = 1.0, cur = lambda_p;
  for (unsigned k = 1; k < j; ++k) {
    double next = lambda_p * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> extend_multiplicatively(const PrimePowerTable& table, std::size_t n_max,
                                            const FactorSieve& sieve) {
  if (sieve.n_max() < n_max) throw std::invalid_argument("factor sieve too small");
  std::vector<double> out(n_max + 1, 0.0);
  out[0] = 0.0;
  if (n_max >= 1) out[1] = 1.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const uint32_t p = sieve.spf[n];
    std::size_t m = n;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    auto it = table.find(p);
    if (it == table.end())
      throw missing_local_error("prime " + std::to_string(p) + " absent from table");
    if (it->second.size() <= e)
      throw missing_local_error("table depth insufficient at prime " + std::to_string(p));
    out[n] = out[m] * it->second[e];
  }
  return out;
}

// ---------------------------------------------------------------------------
// cache files
// ---------------------------------------------------------------------------

void write_cache(const QExpansion& q, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open cache file for writing: " + path);
  os << "FUNCTORIA-CACHE v1 " << q.form_id << ' ' << q.weight << ' ' << q.n_max() << '\n';
  for (std::size_t n = 1; n <= q.n_max(); ++n) os << n << ' ' << q.a[n].str() << '\n';
  if (!os) throw std::runtime_error("write failure on cache file: " + path);
}

namespace {

Int256 int_pow(uint32_t base, unsigned exp) {
  Int256 r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

// spot checks run on load: multiplicativity rows and p-power recursions,
// restricted to whatever fits in the cached range
void spot_check_hecke(const QExpansion& q) {
  struct Mult {
    std::size_t m, n;
  };
  const Mult mult[] = {{2, 3}, {2, 5}, {3, 4}, {2, 7}, {3, 5}, {4, 5}};
  struct Rec {
    uint32_t p;
    unsigned j;  // checks a(p^(j+1)) from a(p^j), a(p^(j-1))
  };
  const Rec rec[] = {{2, 1}, {3, 1}, {2, 2}, {2, 3}, {5, 1}, {3, 2}};
  const std::size_t N = q.n_max();
  int done = 0;
  for (const auto& mv : mult) {
    if (done == 10 || mv.m * mv.n > N) continue;
    if (q.a[mv.m * mv.n] != q.a[mv.m] * q.a[mv.n])
      throw format_error("cache failed multiplicativity spot check at n = " +
                         std::to_string(mv.m * mv.n));
    ++done;
  }
  for (const auto& rv : rec) {
    const Int256 pk = int_pow(rv.p, rv.j), pk1 = pk * rv.p, pk0 = pk / rv.p;
    if (done == 10 || pk1 > N) continue;
    const Int256 want =
        q.a[pk.convert_to<std::size_t>()] * q.a[rv.p] -
        int_pow(rv.p, q.weight - 1) * q.a[pk0.convert_to<std::size_t>()];
    if (q.a[pk1.convert_to<std::size_t>()] != want)
      throw format_error("cache failed recursion spot check at p = " + std::to_string(rv.p) +
                         ", j = " + std::to_string(rv.j));
    ++done;
  }
}

}  // namespace

QExpansion read_cache(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open cache file: " + path);
  std::string magic, version;
  QExpansion q;
  std::size_t n_rows = 0;
  is >> magic >> version >> q.form_id >> q.weight >> n_rows;
  if (!is || magic != "FUNCTORIA-CACHE" || version != "v1")
    throw format_error("not a FUNCTORIA-CACHE v1 file: " + path);
  if (n_rows == 0 || (q.form_id != "delta12" && q.form_id != "e4delta16"))
    throw format_error("bad cache header in " + path);
  q.a.assign(n_rows + 1, 0);
  for (std::size_t i = 1; i <= n_rows; ++i) {
    std::size_t n = 0;
    std::string digits;
    is >> n >> digits;
    if (!is || n != i) throw format_error("cache row " + std::to_string(i) + " malformed");
    try {
      q.a[i] = Int256(digits);
    } catch (const std::exception&) {
      throw format_error("cache row " + std::to_string(i) + " has a non-integer value");
    }
  }
  if (q.a[1] != 1) throw format_error("cache violates a(1) = 1");
  spot_check_hecke(q);
  return q;
}

}  // namespace functoria
