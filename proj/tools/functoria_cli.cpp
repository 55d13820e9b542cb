// command-line front end: sieving, verification suites, partial-sum fits,
// and exact exponent calculators
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "functoria/asymptotics.hpp"
#include "functoria/characters.hpp"
#include "functoria/dirichlet.hpp"
#include "functoria/eigenforms.hpp"
#include "functoria/exact_series.hpp"
#include "functoria/lifts.hpp"
#include "functoria/verify.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::json;
using namespace functoria;

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct SieveArgs {
  std::string form;
  std::size_t n = 0;
  std::string out;
};

int cmd_sieve(const SieveArgs& a) {
  const QExpansion q = build_form(a.form, a.n);
  const std::string path = a.out.empty() ? a.form + ".cache" : a.out;
  write_cache(q, path);
  std::printf("wrote %zu rows to %s\n", q.n_max(), path.c_str());
  return kExitPass;
}

struct VerifyArgs {
  std::string suite;
  std::size_t n = 100000;
  std::string json_path;
};

int cmd_verify(const VerifyArgs& a) {
  const std::vector<CheckReport> reports = run_suite(a.suite, a.n);
  json arr = json::array();
  bool all_pass = true;
  for (const CheckReport& r : reports) {
    json row = {{"check", r.check}, {"N", r.n}, {"max_abs_error", r.max_abs_error},
                {"pass", r.pass}};
    if (!r.note.empty()) row["note"] = r.note;
    arr.push_back(row);
    all_pass = all_pass && r.pass;
  }
  std::cout << arr.dump(2) << '\n';
  if (!a.json_path.empty()) {
    std::ofstream os(a.json_path);
    if (!os) throw std::runtime_error("cannot open " + a.json_path);
    os << arr.dump(2) << '\n';
  }
  return all_pass ? kExitPass : kExitCheckFail;
}

struct SumsArgs {
  std::string lift;
  std::string form = "delta12";
  std::string form2 = "e4delta16";
  unsigned m = 2;
  uint32_t ell = 3;
  uint32_t chi_index = 1;
  std::string model = "cx";
  unsigned degree = 2;
  std::size_t xmax = 1 << 20;
  std::string csv_path;
  std::string json_path;
};

CoeffSeq build_lift(const SumsArgs& a, const FactorSieve& sieve) {
  const Eigenform f1 = normalize(build_form(a.form, a.xmax));
  if (a.lift == "Lm") return series_Lm(f1, a.m, a.xmax, sieve);
  if (a.lift == "basechange") {
    const DirichletCharacter chi = characters_mod(a.ell).at(a.chi_index);
    return series_base_change(f1, a.ell, chi, a.xmax, sieve);
  }
  const Eigenform f2 = normalize(build_form(a.form2, a.xmax));
  if (a.lift == "L12") return series_L12(f1, f2, a.xmax, sieve);
  if (a.lift == "L11") return series_L11(f1, f2, a.xmax, sieve);
  if (a.lift == "wedge") return series_wedge(f1, f2, a.xmax, sieve);
  throw std::invalid_argument("unknown lift: " + a.lift);
}

unsigned model_degree(const SumsArgs& a) {
  if (a.model == "cx") return 0;
  if (a.model == "cxlogx") return 1;
  if (a.model == "xlogpoly") return a.degree;
  throw std::invalid_argument("unknown model: " + a.model);
}

int cmd_sums(const SumsArgs& a) {
  const FactorSieve sieve(a.xmax);
  const CoeffSeq seq = build_lift(a, sieve);

  std::vector<std::size_t> cps;
  for (std::size_t x = 128; x <= a.xmax / 2; x *= 2) cps.push_back(x);
  cps.push_back(a.xmax);
  const PartialSumSeries sums = partial_sums(seq, cps);
  const FitResult fit = fit_main(sums, model_degree(a));

  json rep = {{"model", fit.model_name()},
              {"coefficients", fit.coeff},
              {"residual_norm", fit.residual_norm},
              {"half_range_drift", fit.half_range_drift}};
  try {
    const ExponentFit ex = error_exponent(sums, fit);
    if (ex.degenerate)
      rep["error_exponent"] = nullptr;
    else
      rep["error_exponent"] = ex.slope;
  } catch (const std::invalid_argument&) {
    rep["error_exponent"] = nullptr;
  }
  std::cout << rep.dump(2) << '\n';
  if (!a.json_path.empty()) {
    std::ofstream os(a.json_path);
    if (!os) throw std::runtime_error("cannot open " + a.json_path);
    os << rep.dump(2) << '\n';
  }
  if (!a.csv_path.empty()) {
    std::ofstream os(a.csv_path);
    if (!os) throw std::runtime_error("cannot open " + a.csv_path);
    os.precision(17);
    os << "x,S,main,residual\n";
    for (std::size_t i = 0; i < sums.x.size(); ++i) {
      const double main = fit.main_at(sums.x[i]);
      os << sums.x[i] << ',' << sums.S[i] << ',' << main << ',' << sums.S[i] - main << '\n';
    }
  }
  return kExitPass;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    return Rational(boost::multiprecision::cpp_int(text.substr(0, slash)),
                    boost::multiprecision::cpp_int(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: " + text);
  }
}

struct ExponentArgs {
  std::vector<unsigned> landau;  // degree, pole order
  std::string perron_theta;
  std::vector<unsigned> moments;
};

int cmd_exponent(const ExponentArgs& a) {
  if (!a.landau.empty()) {
    if (a.landau.size() != 2) throw std::invalid_argument("--landau wants: degree pole_order");
    const ExponentResult r = landau_exponent(a.landau[0], a.landau[1]);
    std::cout << r.exponent << " log^" << r.log_power << '\n';
    return kExitPass;
  }
  if (!a.perron_theta.empty()) {
    const PerronResult r = perron_balance(parse_rational(a.perron_theta), a.moments);
    std::cout << "g = " << r.g << '\n'
              << "T_exp = " << r.T_exp << '\n'
              << "error_exp = " << r.error_exp << '\n';
    return kExitPass;
  }
  throw std::invalid_argument("exponent: pass --landau or --perron");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiplicative coefficient engine for eigenform L-series experiments"};
  app.require_subcommand(1);

  SieveArgs sieve_args;
  CLI::App* sieve = app.add_subcommand("sieve", "write an exact coefficient cache");
  sieve->add_option("--form", sieve_args.form, "delta12 or e4delta16")->required();
  sieve->add_option("--n", sieve_args.n, "number of coefficients")->required();
  sieve->add_option("--out", sieve_args.out, "output path (default <form>.cache)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("--suite", verify_args.suite,
                   "hecke | deligne | corrections | dual-route | basechange | all")
      ->required();
  verify->add_option("--n", verify_args.n, "coefficient range");
  verify->add_option("--json", verify_args.json_path, "also write the report here");

  SumsArgs sums_args;
  CLI::App* sums = app.add_subcommand("sums", "partial sums, main-term fit, error exponent");
  sums->add_option("--lift", sums_args.lift, "Lm | L12 | L11 | wedge | basechange")->required();
  sums->add_option("--form", sums_args.form, "first form id");
  sums->add_option("--form2", sums_args.form2, "second form id (two-form lifts)");
  sums->add_option("--m", sums_args.m, "symmetric power for Lm");
  sums->add_option("--ell", sums_args.ell, "base-change degree (odd prime)");
  sums->add_option("--chi-index", sums_args.chi_index, "character index mod ell");
  sums->add_option("--model", sums_args.model, "cx | cxlogx | xlogpoly");
  sums->add_option("--degree", sums_args.degree, "log degree for xlogpoly");
  sums->add_option("--xmax", sums_args.xmax, "largest checkpoint");
  sums->add_option("--csv", sums_args.csv_path, "x,S,main,residual table");
  sums->add_option("--json", sums_args.json_path, "fit report path");

  ExponentArgs exp_args;
  CLI::App* expo = app.add_subcommand("exponent", "exact-rational exponent calculators");
  expo->add_option("--landau", exp_args.landau, "degree and pole order")->expected(2);
  expo->add_option("--perron", exp_args.perron_theta, "subconvexity exponent theta (rational)");
  expo->add_option("--moments", exp_args.moments, "moment degrees for --perron");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (sieve->parsed()) return cmd_sieve(sieve_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (sums->parsed()) return cmd_sums(sums_args);
    return cmd_exponent(exp_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const format_error& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kExitCheckFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
