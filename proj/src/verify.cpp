#include "functoria/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "functoria/characters.hpp"
#include "functoria/dirichlet.hpp"
#include "functoria/lifts.hpp"

namespace functoria {

namespace {

Int256 int_pow(uint32_t base, unsigned exp) {
  Int256 r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

CheckReport verify_hecke(const QExpansion& q, const FactorSieve& sieve) {
  const std::size_t N = q.n_max();
  if (sieve.n_max() < N) throw std::invalid_argument("factor sieve too small");
  CheckReport rep;
  rep.check = "hecke." + q.form_id;
  rep.n = N;
  rep.pass = true;
  for (std::size_t n = 2; n <= N; ++n) {
    const uint32_t p = sieve.spf[n];
    std::size_t m = n, pe = 1;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      pe *= p;
      ++e;
    }
    bool ok = true;
    if (m > 1) {
      // coprime split n = p^e * m
      ok = q.a[n] == q.a[pe] * q.a[m];
    } else if (e >= 2) {
      // recursion at the pure prime power
      ok = q.a[n] == q.a[p] * q.a[pe / p] - int_pow(p, q.weight - 1) * q.a[pe / (p * p)];
    }
    if (!ok) {
      rep.pass = false;
      if (rep.note.empty()) rep.note = "first failure at n = " + std::to_string(n);
    }
  }
  return rep;
}

CheckReport verify_deligne(const Eigenform& f, const FactorSieve& sieve) {
  const std::size_t N = f.n_max();
  if (sieve.n_max() < N) throw std::invalid_argument("factor sieve too small");
  CheckReport rep;
  rep.check = "deligne." + f.form_id;
  rep.n = N;
  double worst = 0.0;
  uint32_t worst_p = 0;
  for (uint32_t p : sieve.primes()) {
    if (p > N) break;
    const double excess = std::abs(f.lambda[p]) - 2.0;
    if (excess > worst) {
      worst = excess;
      worst_p = p;
    }
  }
  rep.max_abs_error = std::max(worst, 0.0);
  rep.pass = worst <= 1e-9;
  if (worst_p != 0) rep.note = "largest value at p = " + std::to_string(worst_p);
  return rep;
}

CheckReport verify_normalization(const QExpansion& q, const Eigenform& f,
                                 const FactorSieve& sieve) {
  const std::size_t N = f.n_max();
  PrimePowerTable table;
  for (uint32_t p : sieve.primes()) {
    if (p > N) break;
    unsigned depth = 0;
    std::size_t pw = 1;
    while (pw <= N / p) {
      pw *= p;
      ++depth;
    }
    std::vector<double> row(depth + 1);
    for (unsigned j = 0; j <= depth; ++j) row[j] = lambda_prime_power(f.lambda[p], j);
    table.emplace(p, std::move(row));
  }
  const std::vector<double> ext = extend_multiplicatively(table, N, sieve);
  CheckReport rep;
  rep.check = "normalization." + q.form_id;
  rep.n = N;
  for (std::size_t n = 1; n <= N; ++n)
    rep.max_abs_error = std::max(rep.max_abs_error, std::abs(ext[n] - f.lambda[n]));
  rep.pass = rep.max_abs_error < 1e-9;
  return rep;
}

namespace {

double max_at_primes(const CoeffSeq& s, const FactorSieve& sieve, std::size_t N) {
  double worst = 0.0;
  for (uint32_t p : sieve.primes()) {
    if (p > N) break;
    worst = std::max(worst, std::abs(s.a[p]));
  }
  return worst;
}

double max_abs_diff(const CoeffSeq& a, const CoeffSeq& b) {
  double worst = 0.0;
  for (std::size_t n = 1; n <= std::min(a.n_max(), b.n_max()); ++n)
    worst = std::max(worst, std::abs(a.a[n] - b.a[n]));
  return worst;
}

CheckReport report_threshold(std::string name, std::size_t n, double err, double tol) {
  CheckReport rep;
  rep.check = std::move(name);
  rep.n = n;
  rep.max_abs_error = err;
  rep.pass = err < tol;
  return rep;
}

void suite_hecke(std::vector<CheckReport>& out, const QExpansion& q1, const QExpansion& q2,
                 const FactorSieve& sieve) {
  out.push_back(verify_hecke(q1, sieve));
  out.push_back(verify_hecke(q2, sieve));
}

void suite_deligne(std::vector<CheckReport>& out, const QExpansion& q1, const QExpansion& q2,
                   const Eigenform& f1, const Eigenform& f2, const FactorSieve& sieve) {
  out.push_back(verify_deligne(f1, sieve));
  out.push_back(verify_deligne(f2, sieve));
  out.push_back(verify_normalization(q1, f1, sieve));
  out.push_back(verify_normalization(q2, f2, sieve));
}

void suite_corrections(std::vector<CheckReport>& out, const Eigenform& f1, const Eigenform& f2,
                       std::size_t N, const FactorSieve& sieve) {
  for (const Eigenform* f : {&f1, &f2}) {
    for (unsigned m = 2; m <= 4; ++m) {
      CoeffSeq u = correction_Um(*f, m, N, sieve);
      CheckReport rep = report_threshold(u.meta + ".prime_vanishing", N,
                                         max_at_primes(u, sieve, N), 1e-9);
      if (std::abs(u.a[1] - cplx(1.0, 0.0)) > 1e-12) {
        rep.pass = false;
        rep.note = "u(1) != 1";
      }
      out.push_back(rep);
    }
  }
  CoeffSeq v12 = correction_V12(f1, f2, N, sieve);
  out.push_back(report_threshold(v12.meta + ".prime_vanishing", N,
                                 max_at_primes(v12, sieve, N), 1e-9));
  CoeffSeq v11 = correction_V11(f1, f2, N, sieve);
  out.push_back(report_threshold(v11.meta + ".prime_vanishing", N,
                                 max_at_primes(v11, sieve, N), 1e-9));
}

void suite_dual_route(std::vector<CheckReport>& out, const Eigenform& f1, const Eigenform& f2,
                      std::size_t N, const FactorSieve& sieve) {
  // factorization of the sym^2 square into zeta * sym^2 * sym^4
  for (const Eigenform* f : {&f1, &f2}) {
    const CoeffSeq rs2 = series_RS_symm(*f, 2, N, sieve);
    const CoeffSeq factored = convolve(convolve(ones_seq(N), series_sym_power(*f, 2, N, sieve)),
                                       series_sym_power(*f, 4, N, sieve));
    out.push_back(report_threshold("rs_sym2_factorization." + f->form_id, N,
                                   max_abs_diff(rs2, factored), 1e-8));
  }
  // reconstruction of the direct power series from its quotient
  for (const Eigenform* f : {&f1, &f2}) {
    for (unsigned m = 2; m <= 4; ++m) {
      const CoeffSeq lm = series_Lm(*f, m, N, sieve);
      const CoeffSeq back = convolve(series_RS_symm(*f, m, N, sieve),
                                     correction_Um(*f, m, N, sieve));
      out.push_back(report_threshold(
          "reconstruction.L" + std::to_string(m) + "." + f->form_id, N,
          max_abs_diff(lm, back), 1e-8));
    }
  }
  // exterior-square parameter route vs the four-sym^2-pair route
  const CoeffSeq param36 = series_wedge_param_route(f1, f2, N, sieve);
  const CoeffSeq rs_route = series_wedge_rs_route(f1, f2, N, sieve);
  out.push_back(
      report_threshold("wedge_param_vs_rs_route", N, max_abs_diff(param36, rs_route), 1e-8));
  // full wedge product reconstructed from the rs route and the four quotients
  const CoeffSeq direct = series_wedge(f1, f2, N, sieve);
  CoeffSeq corr = divide(direct, rs_route);
  const CoeffSeq back = convolve(rs_route, corr);
  out.push_back(report_threshold("wedge_quotient_roundtrip", N, max_abs_diff(direct, back), 1e-8));
}

void suite_basechange(std::vector<CheckReport>& out, const Eigenform& f, std::size_t N,
                      const FactorSieve& sieve) {
  struct Inst {
    uint32_t ell;
    std::size_t cap;
    double nonneg_tol;
  };
  for (const Inst inst : {Inst{3, N, 1e-9}, Inst{5, std::min<std::size_t>(N, 10000), 1e-8}}) {
    const std::size_t n = inst.cap;
    const DirichletCharacter chi = characters_mod(inst.ell)[1];
    const CoeffSeq F = series_base_change(f, inst.ell, chi, n, sieve);
    const std::string tag = "basechange" + std::to_string(inst.ell);

    out.push_back(report_threshold(tag + ".real", n, max_imag(F), 1e-9));

    CheckReport nn;
    nn.check = tag + ".nonnegative";
    nn.n = n;
    double worst = 0.0;
    std::size_t worst_n = 0;
    for (std::size_t i = 1; i <= n; ++i)
      if (F.a[i].real() < worst) {
        worst = F.a[i].real();
        worst_n = i;
      }
    nn.max_abs_error = -worst;
    nn.pass = worst >= -inst.nonneg_tol;
    if (worst_n != 0) nn.note = "most negative at n = " + std::to_string(worst_n);
    out.push_back(nn);

    CheckReport mult;
    mult.check = tag + ".multiplicative";
    mult.n = n;
    for (std::size_t m1 = 2; m1 <= 60; ++m1)
      for (std::size_t m2 = m1 + 1; m2 * m1 <= n && m2 <= 200; ++m2) {
        if (std::gcd(m1, m2) != 1) continue;
        const double want = std::abs(F.a[m1 * m2] - F.a[m1] * F.a[m2]);
        const double scale = 1.0 + std::abs(F.a[m1 * m2]);
        mult.max_abs_error = std::max(mult.max_abs_error, want / scale);
      }
    mult.pass = mult.max_abs_error < 1e-8;
    out.push_back(mult);

    if (inst.ell == 3) {
      CheckReport spot;
      spot.check = tag + ".split_prime_value";
      spot.n = n;
      for (uint32_t p : sieve.primes()) {
        if (p > n) break;
        if (p % 3 != 1) continue;
        const double lam = f.lambda[p];
        spot.max_abs_error =
            std::max(spot.max_abs_error, std::abs(F.a[p].real() - 9.0 * lam * lam));
      }
      spot.pass = spot.max_abs_error < 1e-8;
      out.push_back(spot);
    }
  }
}

}  // namespace

std::vector<CheckReport> run_suite(const std::string& suite, std::size_t n_max) {
  if (n_max < 64) throw std::invalid_argument("suite range too small to be meaningful");
  const FactorSieve sieve(n_max);
  const QExpansion q1 = sieve_delta(n_max);
  const QExpansion q2 = build_weight16(n_max);
  const Eigenform f1 = normalize(q1);
  const Eigenform f2 = normalize(q2);
  std::vector<CheckReport> out;
  const bool all = suite == "all";
  if (all || suite == "hecke") suite_hecke(out, q1, q2, sieve);
  if (all || suite == "deligne") suite_deligne(out, q1, q2, f1, f2, sieve);
  if (all || suite == "corrections") suite_corrections(out, f1, f2, n_max, sieve);
  if (all || suite == "dual-route")
    suite_dual_route(out, f1, f2, std::min<std::size_t>(n_max, 10000), sieve);
  if (all || suite == "basechange") suite_basechange(out, f1, n_max, sieve);
  if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace functoria
