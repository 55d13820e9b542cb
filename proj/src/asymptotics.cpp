#include "functoria/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace functoria {

PartialSumSeries partial_sums(const CoeffSeq& a, const std::vector<std::size_t>& checkpoints) {
  if (checkpoints.empty()) throw std::invalid_argument("partial_sums: no checkpoints");
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    if (checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("partial_sums: checkpoints must strictly increase");
  if (checkpoints.front() < 1 || checkpoints.back() > a.n_max())
    throw std::invalid_argument("partial_sums: checkpoint outside series range");
  PartialSumSeries out;
  out.x.reserve(checkpoints.size());
  out.S.reserve(checkpoints.size());
  double acc = 0.0;
  std::size_t idx = 0;
  for (std::size_t n = 1; n <= checkpoints.back(); ++n) {
    acc += a.a[n].real();
    while (idx < checkpoints.size() && n == checkpoints[idx]) {
      out.x.push_back(double(checkpoints[idx]));
      out.S.push_back(acc);
      ++idx;
    }
  }
  return out;
}

std::vector<std::size_t> dyadic_checkpoints(unsigned lo, unsigned hi) {
  if (lo > hi || hi > 62) throw std::invalid_argument("bad dyadic checkpoint range");
  std::vector<std::size_t> out;
  for (unsigned k = lo; k <= hi; ++k) out.push_back(std::size_t(1) << k);
  return out;
}

namespace {

// least squares of y on the (degree+1)-dim log-power basis at points x;
// normal equations solved by Gaussian elimination with partial pivoting
std::vector<double> solve_fit(const std::vector<double>& x, const std::vector<double>& y,
                              unsigned degree) {
  const unsigned dim = degree + 1;
  if (x.size() < dim) throw std::invalid_argument("fit: fewer checkpoints than coefficients");
  std::vector<double> ata(dim * dim, 0.0), aty(dim, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    std::vector<double> row(dim);
    row[0] = 1.0;
    for (unsigned k = 1; k < dim; ++k) row[k] = row[k - 1] * lx;
    for (unsigned r = 0; r < dim; ++r) {
      aty[r] += row[r] * y[i];
      for (unsigned c = 0; c < dim; ++c) ata[r * dim + c] += row[r] * row[c];
    }
  }
  for (unsigned col = 0; col < dim; ++col) {
    unsigned piv = col;
    for (unsigned r = col + 1; r < dim; ++r)
      if (std::abs(ata[r * dim + col]) > std::abs(ata[piv * dim + col])) piv = r;
    if (ata[piv * dim + col] == 0.0) throw std::invalid_argument("fit: rank-deficient design");
    if (piv != col) {
      for (unsigned c = 0; c < dim; ++c) std::swap(ata[piv * dim + c], ata[col * dim + c]);
      std::swap(aty[piv], aty[col]);
    }
    for (unsigned r = col + 1; r < dim; ++r) {
      const double fct = ata[r * dim + col] / ata[col * dim + col];
      for (unsigned c = col; c < dim; ++c) ata[r * dim + c] -= fct * ata[col * dim + c];
      aty[r] -= fct * aty[col];
    }
  }
  std::vector<double> coeff(dim, 0.0);
  for (int r = int(dim) - 1; r >= 0; --r) {
    double v = aty[r];
    for (unsigned c = r + 1; c < dim; ++c) v -= ata[r * dim + c] * coeff[c];
    coeff[r] = v / ata[r * dim + r];
  }
  return coeff;
}

double eval_logpoly(const std::vector<double>& coeff, double x) {
  const double lx = std::log(x);
  double v = 0.0;
  for (std::size_t k = coeff.size(); k-- > 0;) v = v * lx + coeff[k];
  return v;
}

}  // namespace

double FitResult::main_at(double x) const { return x * eval_logpoly(coeff, x); }

std::string FitResult::model_name() const {
  if (log_degree == 0) return "cx";
  if (log_degree == 1) return "cxlogx";
  return "xlogpoly" + std::to_string(log_degree);
}

FitResult fit_main(const PartialSumSeries& S, unsigned log_degree) {
  const std::size_t n = S.x.size();
  if (n != S.S.size() || n < 2 * (log_degree + 1))
    throw std::invalid_argument("fit: need at least 2(degree+1) checkpoints");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = S.S[i] / S.x[i];

  FitResult fit;
  fit.log_degree = log_degree;
  fit.coeff = solve_fit(S.x, y, log_degree);

  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - eval_logpoly(fit.coeff, S.x[i]);
    ss += r * r;
  }
  fit.residual_norm = std::sqrt(ss / double(n));

  const std::size_t half = n / 2;
  std::vector<double> xl(S.x.begin(), S.x.begin() + half), yl(y.begin(), y.begin() + half);
  std::vector<double> xh(S.x.begin() + half, S.x.end()), yh(y.begin() + half, y.end());
  const std::vector<double> lo = solve_fit(xl, yl, log_degree);
  const std::vector<double> hi = solve_fit(xh, yh, log_degree);
  fit.coeff_drift.resize(log_degree + 1);
  for (unsigned k = 0; k <= log_degree; ++k) {
    const double scale = std::max(std::abs(fit.coeff[k]), 1e-300);
    fit.coeff_drift[k] = std::abs(lo[k] - hi[k]) / scale;
    fit.half_range_drift = std::max(fit.half_range_drift, fit.coeff_drift[k]);
  }
  return fit;
}

ExponentFit error_exponent(const PartialSumSeries& S, const FitResult& fit) {
  if (S.x.size() < 8) throw std::invalid_argument("error exponent: need >= 8 checkpoints");
  std::vector<double> lx, lr;
  for (std::size_t i = 0; i < S.x.size(); ++i) {
    const double main = fit.main_at(S.x[i]);
    const double r = std::abs(S.S[i] - main);
    if (r < 1e-12 * std::abs(main)) continue;
    lx.push_back(std::log(S.x[i]));
    lr.push_back(std::log(r));
  }
  ExponentFit out;
  out.points_used = lx.size();
  if (lx.size() < 2) {
    out.degenerate = true;
    return out;
  }
  const double n = double(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double mr = std::accumulate(lr.begin(), lr.end(), 0.0) / n;
  double sxx = 0.0, sxr = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxr += (lx[i] - mx) * (lr[i] - mr);
  }
  if (sxx == 0.0) {
    out.degenerate = true;
    return out;
  }
  out.slope = sxr / sxx;
  return out;
}

// ---------------------------------------------------------------------------
// exact-rational calculators
// ---------------------------------------------------------------------------

ExponentResult landau_exponent(unsigned degree_d, unsigned pole_order_k) {
  if (degree_d < 2) throw std::invalid_argument("landau: degree must be >= 2");
  if (pole_order_k < 1) throw std::invalid_argument("landau: pole order must be >= 1");
  ExponentResult r;
  r.exponent = Rational(degree_d - 1, degree_d + 1);
  r.log_power = pole_order_k - 1;
  return r;
}

PerronResult perron_balance(const Rational& theta, const std::vector<unsigned>& moment_degrees) {
  if (theta < 0) throw std::invalid_argument("perron: theta must be >= 0");
  Rational g = -1;
  g += theta;
  for (unsigned m : moment_degrees) g += Rational(m + 1, 4);
  if (g <= -1) throw std::invalid_argument("perron: contour exponent g must exceed -1");
  PerronResult out;
  out.g = g;
  out.T_exp = Rational(1, 2) / (1 + g);
  out.error_exp = 1 - out.T_exp;
  return out;
}

}  // namespace functoria
