// Command line front end: analyze, decay and corpus.
#include "nphk/classify.hpp"
#include "nphk/corpus.hpp"
#include "nphk/error.hpp"
#include "nphk/exponent.hpp"
#include "nphk/oscint.hpp"
#include "nphk/parse.hpp"
#include "nphk/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace nphk;

namespace {

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path);
  f << content;
  if (!f) throw Error(ErrorKind::Io, "failed writing " + path);
}

// Height used as the decay reference: the classified h when supported, and
// the standard A-type values 1 (Morse) and 2n/(n+2) otherwise.
std::optional<double> reference_height(const Classification& c) {
  const SingularityKind& k = c.kind;
  if (k.supported()) return to_double(height(k));
  if (k.tag == KindTag::NondegenerateOrRankPositive) {
    if (k.rank == 2) return 1.0;
    if (k.n) return k.n->is_infinite() ? 2.0 : 2.0 * k.n->value() / (k.n->value() + 2.0);
  }
  return std::nullopt;
}

struct Options {
  std::string phi;
  std::string p_list = "1,6/5,4/3,3/2,2";
  std::string json_path, csv_path, svg_path;
  double lmin = 64, lmax = 16384, ratio = 2.0;
  double radius = 0.0;
  std::string s = "0,0";
  bool with_log = false;
  double ppw = 1.25, rtol = 1e-3;
  bool randol = false;
  int m = 0;
  std::string q_list = "2,8";
  int grid = 33;
  double scan_lmax = 8192;
  int levels = 2;
  std::string filter;
  std::optional<std::uint64_t> seed;
  int poison = -1;
};

int run_analyze(const Options& o) {
  std::vector<Rational> ps;
  for (const auto& t : split(o.p_list)) ps.push_back(parse_rational(t));
  AnalysisReport r = analyze(o.phi, ps);
  std::cout << human_summary(r);
  if (!o.json_path.empty()) write_file(o.json_path, to_json(r).dump(2) + "\n");
  if (!o.svg_path.empty()) write_file(o.svg_path, polygon_svg(r));
  // The report is still written for out-of-scope classes; the exit code flags them.
  return r.classification.kind.supported() ? 0 : exit_code(ErrorKind::Unsupported);
}

int run_decay(const Options& o) {
  BivariatePolynomial phi = parse_polynomial(o.phi);
  QuadratureOptions q;
  q.points_per_wave = o.ppw;
  q.rtol = o.rtol;
  if (o.randol) {
    if (o.m < 1) throw Error(ErrorKind::Domain, "--randol needs --m");
    AmplitudeSpec amp{o.radius > 0 ? o.radius : 0.25};
    ScanOptions grid;
    grid.points = o.grid;
    grid.lambda_max = o.scan_lmax;
    grid.levels = o.levels;
    std::vector<double> qs;
    for (const auto& t : split(o.q_list)) qs.push_back(std::stod(t));
    RandolScan scan = randol_lq_scan(phi, amp, o.m, grid, qs, q);
    for (const auto& r : scan.q_report) {
      std::cout << "q=" << r.q << " sums";
      for (double v : r.sums) std::cout << " " << v;
      std::cout << " ratio " << r.ratio << "\n";
    }
    write_file(o.csv_path, scan_csv(scan));
    if (!o.json_path.empty()) write_file(o.json_path, to_json(scan).dump(2) + "\n");
    return 0;
  }
  AmplitudeSpec amp{o.radius > 0 ? o.radius : 1.0};
  auto sv = split(o.s);
  if (sv.size() != 2) throw Error(ErrorKind::Parse, "--s expects two comma separated numbers");
  std::pair<double, double> s{std::stod(sv[0]), std::stod(sv[1])};
  DecayFit fit = fit_decay(phi, amp, geometric_grid(o.lmin, o.lmax, o.ratio), s, o.with_log, q);
  for (const auto& [l, why] : fit.failures) std::cerr << "lambda " << l << " failed: " << why << "\n";
  std::cout << "gamma_hat = " << fit.gamma_hat;
  if (fit.log_correction) std::cout << " (log coefficient " << fit.log_coefficient << ")";
  Classification c = classify(phi);
  if (auto h = reference_height(c)) {
    std::cout << ", 1/h = " << 1.0 / *h << " (" << c.kind.name() << "), gap = " << std::abs(fit.gamma_hat - 1.0 / *h);
  }
  std::cout << ", residual = " << fit.residual << "\n";
  write_file(o.csv_path, decay_csv(fit));
  if (!o.json_path.empty()) {
    Json j = to_json(fit);
    j["phase"] = phi.to_string();
    j["kind"] = c.kind.name();
    write_file(o.json_path, j.dump(2) + "\n");
  }
  return fit.failures.empty() ? 0 : 4;
}

int run_corpus_cmd(const Options& o) {
  auto rows = builtin_corpus();
  if (o.poison >= 0) {
    if (o.poison >= static_cast<int>(rows.size())) throw Error(ErrorKind::Domain, "--poison index out of range");
    rows[o.poison].h = "0";
  }
  CorpusResult res = run_corpus(rows, o.filter);
  if (o.seed) run_affine_checks(rows, o.filter, *o.seed, 10, res);
  for (const auto& c : res.checks)
    if (!c.pass) std::cout << "FAIL " << c.row << " [" << c.field << "] expected " << c.expected << ", got " << c.actual << "\n";
  std::cout << res.rows_run.size() << " rows, " << res.checks.size() << " checks, " << res.failures() << " failures\n";
  if (!o.json_path.empty()) {
    Json j;
    j["rows_run"] = res.rows_run;
    j["checks"] = Json::array();
    for (const auto& c : res.checks)
      j["checks"].push_back({{"row", c.row}, {"field", c.field}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["failures"] = res.failures();
    write_file(o.json_path, j.dump(2) + "\n");
  }
  return res.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polygon heights, sharp L^p exponents and oscillatory integral checks"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "classify a phase and tabulate k_p");
  analyze_cmd->add_option("--phi", o.phi, "phase polynomial in x, y")->required();
  analyze_cmd->add_option("--p", o.p_list, "comma separated exponents p in [1,2]");
  analyze_cmd->add_option("--json", o.json_path, "write the report as JSON ('-' for stdout)");
  analyze_cmd->add_option("--svg", o.svg_path, "write the Newton polygon as SVG");

  auto* decay_cmd = app.add_subcommand("decay", "fit the decay of I(lambda, s) or scan the Randol maximal function");
  decay_cmd->add_option("--phi", o.phi, "phase polynomial in x, y")->required();
  decay_cmd->add_option("--lmin", o.lmin, "smallest lambda");
  decay_cmd->add_option("--lmax", o.lmax, "largest lambda");
  decay_cmd->add_option("--ratio", o.ratio, "geometric ratio of the lambda grid");
  decay_cmd->add_option("--radius", o.radius, "amplitude radius (default 1, or 1/4 for --randol)");
  decay_cmd->add_option("--s", o.s, "offset s1,s2");
  decay_cmd->add_flag("--with-log", o.with_log, "add a log log lambda regressor");
  decay_cmd->add_option("--ppw", o.ppw, "lattice points per oscillation");
  decay_cmd->add_option("--rtol", o.rtol, "relative quadrature tolerance");
  decay_cmd->add_flag("--randol", o.randol, "run the Randol L^q refinement scan");
  decay_cmd->add_option("--m", o.m, "branch order m for --randol");
  decay_cmd->add_option("--q", o.q_list, "comma separated q values for --randol");
  decay_cmd->add_option("--grid", o.grid, "s grid points per axis at the coarse level");
  decay_cmd->add_option("--scan-lmax", o.scan_lmax, "largest lambda at the coarse level");
  decay_cmd->add_option("--levels", o.levels, "number of refinement levels");
  decay_cmd->add_option("--csv", o.csv_path, "write CSV ('-' for stdout)");
  decay_cmd->add_option("--json", o.json_path, "write JSON summary");

  auto* corpus_cmd = app.add_subcommand("corpus", "run the built-in classification corpus");
  corpus_cmd->add_option("--filter", o.filter, "run rows whose kind starts with this tag");
  corpus_cmd->add_option("--seed", o.seed, "also check invariance under seeded random linear maps");
  corpus_cmd->add_option("--poison", o.poison, "corrupt the expected h of this row (self-test)");
  corpus_cmd->add_option("--json", o.json_path, "write results as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return run_analyze(o);
    if (*decay_cmd) return run_decay(o);
    if (*corpus_cmd) return run_corpus_cmd(o);
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << error_json(e).dump() << "\n";
    return 1;
  }
  return 0;
}
