#include "hcl/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "hcl/error.hpp"
#include "hcl/gap_sequence.hpp"
#include "hcl/hilbert_spectra.hpp"
#include "hcl/lower_bound.hpp"
#include "hcl/quadratic_forms.hpp"
#include "hcl/report.hpp"
#include "hcl/suites.hpp"

namespace hcl {
namespace {

using ojson = nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out;
  bool json_lines = false;
  bool timing = false;
};

ojson construction_json(const ConstructionResult& r) {
  ojson j;
  j["K"] = r.k;
  j["A"] = r.a;
  j["B"] = r.b;
  j["kappa0"] = r.kappa0;
  j["kappa1"] = r.kappa1;
  if (std::isfinite(r.u_star)) {
    j["u_star"] = r.u_star;
  } else {
    j["u_star"] = "inf";
  }
  j["G"] = r.g_value;
  return j;
}

CsvTable scan_table(const ScanTable& table) {
  CsvTable csv{{"K", "x", "A", "kappa0", "kappa1", "u_star", "G"}, {}};
  for (const auto& row : table.rows) {
    const auto& r = row.result;
    csv.rows.push_back({std::to_string(r.k), format12(row.x), format12(r.a), format12(r.kappa0),
                        format12(r.kappa1), format12(r.u_star), format12(r.g_value)});
  }
  return csv;
}

RunReport run_scan(const std::string& command, std::size_t kmin, std::size_t kmax, std::size_t steps,
                   const std::string& path) {
  if (kmin < 1 || kmax < kmin || steps < 1) {
    throw Error(ErrorKind::UsageError, "--scan needs 1 <= kmin <= kmax and steps >= 1");
  }
  const auto table = scan(kmin, kmax, steps);
  write_csv(scan_table(table), path);
  RunReport report;
  report.command = command;
  report.params = {{"kmin", kmin}, {"kmax", kmax}, {"steps", steps}, {"out", path}};
  auto best = construction_json(table.rows[table.argmax].result);
  best["x"] = table.rows[table.argmax].x;
  best["rows"] = table.rows.size();
  report.results.push_back(std::move(best));
  return report;
}

GapSequence load_nodes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".json") {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("bad JSON in ") + path + ": " + e.what());
    }
    return GapSequence::from_json(j);
  }
  return GapSequence::from_csv(in);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError:
    case ErrorKind::NoConvergence:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for weighted Hilbert inequalities", "hcl"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Base seed for random sweeps")->default_val(0);
  app.add_option("--tol", g.tol, "Override every per-check slack");
  app.add_option("--out", g.out, "Output path for CSV files");
  app.add_flag("--json", g.json_lines, "Print reports as JSON lines");
  app.add_flag("--timing", g.timing, "Add elapsed_ms to the report");

  auto* verify = app.add_subcommand("verify", "Run inequality and identity sweeps");
  std::string suite = "all";
  std::optional<std::size_t> trials;
  std::optional<std::size_t> max_n;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_choices));
  verify->add_option("--trials", trials, "Trials per check")->check(CLI::PositiveNumber);
  verify->add_option("--max-n", max_n, "Largest sequence length")->check(CLI::Range(2, 100000));

  auto* constant = app.add_subcommand("constant", "Estimate the alpha-form constant of a configuration");
  double alpha = 1.0;
  std::size_t n = 0;
  std::string config = "uniform";
  std::string nodes_path;
  double spacing = 1.0;
  double min_gap = 1.0;
  SearchOptions search;
  constant->add_option("--alpha", alpha, "Exponent in [0, 2]")->required();
  constant->add_option("--n", n, "Sequence length");
  constant->add_option("--config", config, "Configuration")
      ->check(CLI::IsMember({"uniform", "cluster", "random", "search", "nodes"}));
  constant->add_option("--nodes", nodes_path, "Node file (.json or one node per line)");
  constant->add_option("--spacing", spacing, "Gap of the uniform configuration");
  constant->add_option("--min-gap", min_gap, "Smallest gap of the random configuration");
  constant->add_option("--restarts", search.restarts, "Search restarts");
  constant->add_option("--rounds", search.rounds, "Search rounds");

  auto* preissmann = app.add_subcommand("preissmann", "Upper bounds from the two-forms chain");

  auto* lower = app.add_subcommand("lower-bound", "Evaluate the trigonometric lower-bound construction");
  std::vector<double> point;
  std::vector<std::size_t> scan_args;
  auto* point_opt = lower->add_option("--point", point, "K A")->expected(2);
  auto* scan_opt = lower->add_option("--scan", scan_args, "kmin kmax steps")->expected(3);
  point_opt->excludes(scan_opt);

  auto* figure = app.add_subcommand("figure", "Scan K = 1..25 over 99 grid points each");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    if (verify->parsed()) {
      SuiteOptions options{trials, g.seed, max_n, g.tol};
      report.command = "verify";
      report.params = {{"suite", suite}, {"seed", g.seed}};
      if (trials) report.params["trials"] = *trials;
      if (max_n) report.params["max_n"] = *max_n;
      if (g.tol) report.params["tol"] = *g.tol;
      for (const auto& r : run_suite(suite, options)) report.results.push_back(r.to_json());
    } else if (constant->parsed()) {
      std::optional<ConstantEstimate> est;
      report.command = "constant";
      report.params = {{"alpha", alpha}, {"config", config}};
      if (!nodes_path.empty() || config == "nodes") {
        if (nodes_path.empty()) throw Error(ErrorKind::UsageError, "--config nodes needs --nodes");
        config = "nodes";
        report.params["config"] = config;
        report.params["nodes"] = nodes_path;
        est = estimate_constant(alpha, load_nodes(nodes_path));
      } else {
        if (n == 0) throw Error(ErrorKind::UsageError, "--n is required for --config " + config);
        report.params["n"] = n;
        if (config == "uniform") {
          est = estimate_constant(alpha, GapSequence::uniform(n, spacing));
        } else if (config == "cluster") {
          est = estimate_constant(alpha, GapSequence::cluster(n));
        } else if (config == "random") {
          report.params["seed"] = g.seed;
          est = estimate_constant(alpha, GapSequence::random(n, min_gap, g.seed));
        } else {
          search.seed = g.seed;
          report.params["seed"] = g.seed;
          report.params["restarts"] = search.restarts;
          report.params["rounds"] = search.rounds;
          est = search_configuration(alpha, n, search);
        }
      }
      report.results.push_back(ojson(est->to_json(config)));
    } else if (preissmann->parsed()) {
      const auto chain = preissmann_chain();
      const double ceiling = 4.0 * std::numbers::pi / 3.0;
      report.command = "preissmann";
      report.results.push_back({{"s_coeff", chain.s_coeff},
                                {"t_coeff", chain.t_coeff},
                                {"c3_upper", chain.c3_upper},
                                {"c1_upper", chain.c1_upper},
                                {"four_pi_over_3", ceiling},
                                {"holds", chain.c1_upper < ceiling}});
    } else if (lower->parsed()) {
      if (!point.empty()) {
        const double k = point[0];
        if (k < 1 || k != std::floor(k)) throw Error(ErrorKind::UsageError, "--point needs an integer K >= 1");
        report.command = "lower-bound";
        report.params = {{"K", static_cast<std::size_t>(k)}, {"A", point[1]}};
        report.results.push_back(construction_json(big_g(static_cast<std::size_t>(k), point[1])));
      } else if (!scan_args.empty()) {
        report = run_scan("lower-bound", scan_args[0], scan_args[1], scan_args[2],
                          g.out.empty() ? "figure1.csv" : g.out);
      } else {
        throw Error(ErrorKind::UsageError, "lower-bound needs --point K A or --scan kmin kmax steps");
      }
    } else if (figure->parsed()) {
      report = run_scan("figure", 1, 25, 99, g.out.empty() ? "figure1.csv" : g.out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::UsageError) err << app.help();
    return exit_code(e.kind());
  }

  if (g.timing) {
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  const auto j = report.to_json();
  if (g.json_lines) {
    out << report.to_json_lines();
  } else {
    out << j.dump(2) << "\n";
  }
  return j["all_hold"].get<bool>() ? 0 : 1;
}

}  // namespace hcl
