// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 125).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hcl/cli.hpp"
#include "hcl/hilbert_spectra.hpp"
#include "hcl/lower_bound.hpp"
#include "hcl/quadratic_forms.hpp"
#include "hcl/suites.hpp"

using namespace hcl;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

nlohmann::json run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = dispatch(args, out, err);
  return nlohmann::json::parse(out.str());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome suite_outcome(const std::vector<SweepRecord>& records) {
  std::size_t failed = 0;
  std::string first;
  for (const auto& r : records) {
    if (!r.holds) {
      if (failed++ == 0) first = r.lemma;
    }
  }
  std::string detail = std::to_string(records.size()) + " records";
  if (failed > 0) detail += ", " + std::to_string(failed) + " failed (first: " + first + ")";
  return {failed == 0, detail};
}

Outcome headline() {
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  const auto j = run_cli({"lower-bound", "--point", "5", "0.14"}, code);
  const double t = seconds_since(start);
  const double g = j["results"][0]["G"].get<double>();
  return {code == 0 && g > 0.35047 && g < 0.3506 && t < 1.0, fmt("G = %.12g, %.3f s", g, t)};
}

Outcome barrier() {
  const double g = big_g(5, 0.14).g_value;
  const double c1 = two_forms_bound(kPi * kPi * g);
  const double stated = std::floor(two_forms_bound(0.35047 * kPi * kPi) * 1e5) / 1e5;
  return {c1 >= 3.19497 && std::abs(stated - 3.19497) < 1e-12,
          fmt("bound(pi^2 G) = %.8f, bound(0.35047 pi^2) to 5 places = %.5f", c1, stated)};
}

Outcome chain() {
  const auto c = preissmann_chain();
  const double root = c.c3_upper * c.c3_upper - c.t_coeff * c.c3_upper - c.s_coeff;
  const double closed = kPi * std::sqrt(1 + 2.0 / 3.0 * std::sqrt(1.2));
  return {std::abs(root) < 1e-9 && c.c1_upper < 4 * kPi / 3 && std::abs(c.c1_upper - closed) < 1e-10,
          fmt("c3 = %.10f, c1 = %.10f, root residual %.1e", c.c3_upper, c.c1_upper, root)};
}

Outcome figure() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "hcl_acceptance_fig_a.csv";
  const auto b = dir / "hcl_acceptance_fig_b.csv";
  const auto start = std::chrono::steady_clock::now();
  int code_a = 0;
  const auto j = run_cli({"figure", "--out", a.string()}, code_a);
  const double t = seconds_since(start);
  int code_b = 0;
  run_cli({"figure", "--out", b.string()}, code_b);
  const auto best = j["results"][0];
  const bool stable = slurp(a) == slurp(b) && !slurp(a).empty();
  const bool ok = code_a == 0 && code_b == 0 && t < 60.0 && best["K"] == 5 &&
                  std::abs(best["x"].get<double>() - 0.84) < 1e-12 && best["G"].get<double>() > 0.35047 &&
                  best["rows"] == 25 * 99 && stable;
  return {ok, fmt("argmax K = %.0f, x = %.2f, G = %.12g", best["K"].get<double>(), best["x"].get<double>(),
                  best["G"].get<double>()) +
                  fmt(", %.3f s, byte-stable: ", t) + (stable ? "yes" : "no")};
}

Outcome finite_constants() {
  const std::vector<GapSequence> configs{GapSequence::uniform(2, 1.0), GapSequence::uniform(2, 0.37),
                                         GapSequence::from_nodes({-5, 0, 2, 9})};
  double worst = 0.0;
  for (const auto& s : configs) {
    for (double a : {0.0, 0.5, 1.0, 1.5, 2.0}) worst = std::max(worst, std::abs(estimate_constant(a, s).value - 1.0));
  }
  const double one = estimate_constant(0.5, GapSequence::uniform(1, 1.0)).value;
  return {worst <= 1e-9 && one == 0.0, fmt("max |C(N=2) - 1| = %.1e, C(N=1) = %g", worst, one)};
}

Outcome squeeze() {
  const auto start = std::chrono::steady_clock::now();
  const double big = uniform_lower_bound(10000);
  const double low = uniform_lower_bound(200);
  const double est = estimate_constant(1.0, GapSequence::uniform(200, 1.0)).value;
  const double t = seconds_since(start);
  const bool first = big >= 3.2878;
  const bool second = est > low && est < kPi * kPi / 3 + 1e-9;
  return {first && second && t < 10.0,
          fmt("uniform_lower_bound(1e4) = %.9f (needs >= 3.2878), ", big) +
              fmt("C(1, N=200) = %.9f in (%.9f, pi^2/3)", est, low) + fmt(", %.3f s", t)};
}

Outcome selberg() {
  SuiteOptions opts;
  opts.trials = 100;
  opts.max_n = 12;
  const auto records = selberg_suite(opts);
  double worst = 0.0;
  for (const auto& r : records) worst = std::max(worst, r.lhs);
  auto out = suite_outcome(records);
  out.detail += fmt(", max relative residual %.2e", worst);
  return out;
}

Outcome spacing() {
  SuiteOptions opts;
  auto records = spacing_suite(opts);
  const auto pairs = pair_spacing_suite(opts);
  records.insert(records.end(), pairs.begin(), pairs.end());
  return suite_outcome(records);
}

Outcome alpha_structure() { return suite_outcome(alpha_properties_suite(SuiteOptions{})); }

Outcome trig() {
  std::vector<SweepRecord> kept;
  for (const auto& r : trig_suite(SuiteOptions{})) {
    if (r.lemma == "trig-line-doubling" || r.lemma == "trig-line-k200" || r.lemma == "l-sum-residual") {
      kept.push_back(r);
    }
  }
  return suite_outcome(kept);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"headline lower bound", headline},
      {"barrier constant", barrier},
      {"upper-bound chain", chain},
      {"figure scan", figure},
      {"exact finite constants", finite_constants},
      {"uniform squeeze", squeeze},
      {"identity suite", selberg},
      {"spacing suites", spacing},
      {"alpha structure", alpha_structure},
      {"trig/line equivalence", trig},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(start);
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), t);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return std::min(failed, 125);
}
