// jacobi-edge: structured gap forms, curves, Monte Carlo and verification
// for the beta-Jacobi and circular ensembles.

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jacobi_edge/circular.hpp"
#include "jacobi_edge/errors.hpp"
#include "jacobi_edge/gap_solvers.hpp"
#include "jacobi_edge/serialize.hpp"
#include "jacobi_edge/verification.hpp"

using namespace jacobi_edge;

namespace {

constexpr int exit_invalid = 1;
constexpr int exit_numeric = 2;
constexpr int exit_verification = 3;

struct Grid {
  double start = 0;
  double stop = 1;
  int points = 101;

  std::vector<double> values() const {
    std::vector<double> out;
    for (int i = 0; i < points; ++i) out.push_back(points == 1 ? start : start + (stop - start) * i / (points - 1));
    return out;
  }
};

Grid parse_grid(const std::string& text, double lo, double hi) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string p; std::getline(in, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw InvalidParameters("grid must be start:stop:points, got '" + text + "'");
  Grid g;
  try {
    g.start = std::stod(parts[0]);
    g.stop = std::stod(parts[1]);
    g.points = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw InvalidParameters("grid must be start:stop:points, got '" + text + "'");
  }
  if (g.points < 1 || g.start > g.stop || g.start < lo || g.stop > hi) {
    throw InvalidParameters("grid " + text + " must satisfy " + std::to_string(lo) + " <= start <= stop <= " +
                            std::to_string(hi) + " with points >= 1");
  }
  return g;
}

struct Options {
  std::string n = "1";
  std::string lambda1 = "0";
  std::optional<std::string> lambda2;
  std::optional<long> k;
  std::string beta = "2";
  std::string scheme = "auto";
  std::optional<std::string> grid;
  std::uint64_t seed = 1;
  std::size_t samples = 100000;
  std::string output;
  std::string format = "csv";
  double endpoint_eps = default_endpoint_eps;
};

JacobiParams params_from(const Options& o) {
  const Rational n = parse_rational(o.n);
  if (!is_integer(n) || n < 1) throw InvalidParameters("--n must be a positive integer");
  const Rational beta = parse_rational(o.beta);
  const Rational l1 = parse_rational(o.lambda1);
  if (o.k && o.lambda2) throw InvalidParameters("give either --lambda2 or --k, not both");
  JacobiParams p;
  if (o.k) {
    if (*o.k < 0) throw InvalidParameters("--k must be a non-negative integer");
    p = case2_params(l1, beta, *o.k, to_long(n));
  } else {
    p = {l1, o.lambda2 ? parse_rational(*o.lambda2) : Rational(0), beta, to_long(n)};
  }
  p.validate();
  return p;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameters("cannot open " + path + " for writing");
  out << text;
}

std::string curve_csv(const std::vector<std::pair<double, double>>& rows, const char* column) {
  std::ostringstream out;
  write_curve_csv(out, rows, column);
  return out.str();
}

// Writes PREFIX.json and PREFIX.csv, or one of them to stdout.
void emit(const Options& o, const Json& form, const std::vector<std::pair<double, double>>& rows,
          const char* column = "s") {
  const std::string json = form.dump(2) + "\n";
  const std::string csv = curve_csv(rows, column);
  if (!o.output.empty()) {
    write_text(o.output + ".json", json);
    write_text(o.output + ".csv", csv);
  } else {
    std::cout << (o.format == "json" ? json : csv);
  }
}

int run_gap(const Options& o) {
  const JacobiParams p = params_from(o);
  const GapForm form = solve_gap(p, parse_scheme(o.scheme));
  const Grid g = parse_grid(o.grid.value_or("0:1:101"), 0, 1);
  std::vector<std::pair<double, double>> rows;
  for (double s : g.values()) rows.emplace_back(s, to_double(evaluate(form, Real(s), o.endpoint_eps)));
  emit(o, serialize(form), rows);
  return 0;
}

int run_density(const Options& o, bool smallest) {
  const JacobiParams p = params_from(o);
  const Scheme scheme = parse_scheme(o.scheme);
  const DensityForm form = smallest ? solve_pmin(p, scheme) : solve_pmax(p, scheme);
  const Grid g = parse_grid(o.grid.value_or("0:1:101"), 0, 1);
  std::vector<std::pair<double, double>> rows;
  for (double s : g.values()) {
    const Real x = smallest ? Real(1) - Real(s) : Real(s);
    rows.emplace_back(s, to_double(evaluate(form, x, o.endpoint_eps)));
  }
  Json j = serialize(form);
  if (smallest) j = Json{{"type", "pmin"}, {"params", serialize(p)}, {"reflected_pmax", j}, {"variable", "1 - s"}};
  emit(o, j, rows);
  return 0;
}

int run_circular(const Options& o) {
  const Rational n = parse_rational(o.n);
  const Rational beta = parse_rational(o.beta);
  if (!is_integer(n) || n < 1 || !is_integer(beta) || beta < 1) {
    throw InvalidParameters("circular needs positive integer --n and --beta");
  }
  const long nn = to_long(n);
  const long bb = to_long(beta);
  TrigGapForm form;
  if (o.scheme == "auto" || o.scheme == "direct") {
    form = circ_gap_integer_beta(nn, bb);
  } else if (o.scheme == "even") {
    form = circ_gap_even_beta(nn, bb);
  } else {
    throw InvalidParameters("circular scheme must be auto, direct or even");
  }
  const double two_pi = 2 * M_PI;
  const Grid g = o.grid ? parse_grid(*o.grid, 0, two_pi + 1e-12) : Grid{0, two_pi, 101};
  std::vector<std::pair<double, double>> rows;
  for (double phi : g.values()) rows.emplace_back(phi, to_double(evaluate(form, Real(std::min(phi, two_pi)))));
  emit(o, serialize(form), rows, "phi");
  return 0;
}

int run_mc(const Options& o) {
  const JacobiParams p = params_from(o);
  const auto xs = sample_lambda_max(CSModelParams::from(p), o.samples, o.seed, default_thread_count());
  const EmpiricalCDF cdf(xs);
  const Grid g = parse_grid(o.grid.value_or("0:1:101"), 0, 1);
  std::vector<std::pair<double, double>> rows;
  for (double s : g.values()) rows.emplace_back(s, cdf(s));
  if (!o.output.empty()) {
    std::ostringstream samples;
    samples << "lambda_max\n" << std::setprecision(17);
    for (double x : xs) samples << x << '\n';
    write_text(o.output + ".samples.csv", samples.str());
    write_text(o.output + ".csv", curve_csv(rows, "s"));
    const Json meta{{"type", "monte_carlo"}, {"params", serialize(p)}, {"samples", o.samples}, {"seed", o.seed}};
    write_text(o.output + ".json", meta.dump(2) + "\n");
  } else {
    std::cout << curve_csv(rows, "s");
  }
  return 0;
}

CheckResult run_check(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const VerificationFailure& e) {
    return {name + ": " + e.what(), 0, 0, false};
  }
}

int run_verify(const Options& o) {
  const JacobiParams p = params_from(o);
  const GapForm form = solve_gap(p, parse_scheme(o.scheme));
  std::vector<CheckResult> report;

  if (const auto* poly = std::get_if<PolyGapForm>(&form)) {
    Rational total = 0;
    for (const auto& g : poly->gamma) total += g;
    report.push_back({"sum of gamma_p equals 1", to_double(total - 1), 0, total == 1});
  } else if (const auto* edge = std::get_if<EdgeSeriesForm>(&form)) {
    Rational total = 1;
    for (const auto& [key, c] : edge->gamma_tilde) total += c;
    report.push_back({"1 + sum of edge coefficients equals 0", to_double(total), 0, sgn(total) == 0});
  } else {
    const double dev = to_double(abs(evaluate(form, Real(1) - Real(1e-6), 0) - 1));
    const double bound = std::pow(1e-6, std::min(1.0, p.lambda2.get_d() + 1));
    report.push_back({"endpoint value E(1 - 1e-6) near 1", dev, bound, dev <= bound});
  }
  report.push_back(run_check("gap form monotone in [0, 1]", [&] {
    check_monotone_gap(form);
    return CheckResult{"gap form monotone in [0, 1]", 0, 0, true};
  }));
  if (p.n <= 3) {
    double worst = 0;
    for (double s : {0.2, 0.5, 0.8}) worst = std::max(worst, std::fabs(to_double(evaluate(form, Real(s))) - quadrature_gap(p, s)));
    report.push_back({"quadrature oracle at s = 0.2, 0.5, 0.8", worst, 1e-8, worst <= 1e-8});
  }
  const TabulatedFunction table([&](double s) { return to_double(evaluate(form, Real(s), o.endpoint_eps)); }, 1e-7);
  const auto xs = sample_lambda_max(CSModelParams::from(p), o.samples, o.seed, default_thread_count());
  const double d = ks_distance(EmpiricalCDF(xs), [&](double s) { return table(s); });
  report.push_back({"Monte Carlo KS distance", d, ks_threshold(xs.size()), d <= ks_threshold(xs.size())});

  Json j{{"type", "verification"}, {"params", serialize(p)}, {"checks", Json::array()}};
  bool all = true;
  for (const auto& r : report) {
    j["checks"].push_back(serialize(r));
    all = all && r.pass;
  }
  j["pass"] = all;
  const std::string text = j.dump(2) + "\n";
  if (!o.output.empty()) {
    write_text(o.output + ".json", text);
  } else {
    std::cout << text;
  }
  for (const auto& r : report) std::cerr << (r.pass ? "PASS " : "FAIL ") << r.test << '\n';
  return all ? 0 : exit_verification;
}

void add_common(CLI::App* cmd, Options& o, bool jacobi) {
  cmd->add_option("--n", o.n, "number of eigenvalues");
  cmd->add_option("--beta", o.beta, "repulsion exponent, exact rational");
  if (jacobi) {
    cmd->add_option("--lambda1", o.lambda1, "exponent at x = 0, exact rational");
    cmd->add_option("--lambda2", o.lambda2, "exponent at x = 1, exact rational");
    cmd->add_option("--k", o.k, "sets lambda2 = -beta/2 + k");
    cmd->add_option("--endpoint-eps", o.endpoint_eps, "hypergeometric forms use s = 1 - eps at s = 1");
  }
  cmd->add_option("--scheme", o.scheme, "auto, case1, case2, case3-frobenius, case3-nested (circular: auto, direct, even)");
  cmd->add_option("--grid", o.grid, "start:stop:points");
  cmd->add_option("--output", o.output, "output prefix; writes PREFIX.json and PREFIX.csv");
  cmd->add_option("--format", o.format, "stdout format without --output")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gap probabilities and extreme-eigenvalue densities of beta-Jacobi and circular ensembles"};
  app.require_subcommand(1);
  Options o;

  auto* gap = app.add_subcommand("gap", "gap probability E(0; (s, 1))");
  auto* pmax = app.add_subcommand("pmax", "largest-eigenvalue density");
  auto* pmin = app.add_subcommand("pmin", "smallest-eigenvalue density");
  auto* circ = app.add_subcommand("circular", "circular-ensemble gap probability of the arc (0, phi)");
  auto* mc = app.add_subcommand("mc", "Monte Carlo largest eigenvalue from the bidiagonal model");
  auto* verify = app.add_subcommand("verify", "sum rule, monotonicity, oracle and Monte Carlo checks");
  for (auto* cmd : {gap, pmax, pmin, mc, verify}) add_common(cmd, o, true);
  add_common(circ, o, false);
  for (auto* cmd : {mc, verify}) {
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--samples", o.samples, "number of samples");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_invalid;
  }

  try {
    if (gap->parsed()) return run_gap(o);
    if (pmax->parsed()) return run_density(o, false);
    if (pmin->parsed()) return run_density(o, true);
    if (circ->parsed()) return run_circular(o);
    if (mc->parsed()) return run_mc(o);
    if (verify->parsed()) return run_verify(o);
  } catch (const InvalidParameters& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return exit_invalid;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return exit_verification;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return exit_numeric;
  }
  return exit_invalid;
}
