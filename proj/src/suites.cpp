#include "hcl/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hcl/error.hpp"
#include "hcl/gap_sequence.hpp"
#include "hcl/hilbert_spectra.hpp"
#include "hcl/lower_bound.hpp"
#include "hcl/parallel.hpp"
#include "hcl/quadratic_forms.hpp"
#include "hcl/rng.hpp"
#include "hcl/spacing.hpp"

namespace hcl {
namespace {

constexpr double kPi = std::numbers::pi;

struct Defaults {
  std::size_t trials;
  std::size_t max_n;
};

class Plan {
 public:
  Plan(const SuiteOptions& options, Defaults defaults) : options_(options), defaults_(defaults) {}

  std::size_t trials() const { return options_.trials.value_or(defaults_.trials); }
  std::size_t trials(std::size_t fallback) const { return options_.trials.value_or(fallback); }
  std::size_t max_n() const { return std::max<std::size_t>(2, options_.max_n.value_or(defaults_.max_n)); }
  double slack(double fallback) const { return options_.tol.value_or(fallback); }
  // Distinct stream per (check, trial).
  std::uint64_t seed(std::uint64_t check, std::size_t trial) const {
    return derive_seed(derive_seed(options_.seed, check), trial);
  }

 private:
  SuiteOptions options_;
  Defaults defaults_;
};

std::size_t pick_n(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

GapSequence random_sequence(Rng& rng, std::size_t n, std::uint64_t seed) {
  return GapSequence::random(n, rng.uniform(0.01, 2.0), seed);
}

SweepRecord record(std::string lemma, std::uint64_t seed, double lhs, double rhs, bool holds,
                   double tail = 0.0) {
  return SweepRecord{std::move(lemma), seed, lhs, rhs, holds, tail};
}

// Inequality lhs ≤ rhs with an additive slack.
SweepRecord at_most(std::string lemma, std::uint64_t seed, double lhs, double rhs, double slack,
                    double tail = 0.0) {
  return record(std::move(lemma), seed, lhs, rhs, lhs <= rhs + slack, tail);
}

void append(std::vector<SweepRecord>& out, std::vector<SweepRecord> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

nlohmann::ordered_json SweepRecord::to_json() const {
  nlohmann::ordered_json j;
  j["lemma"] = lemma;
  j["seed"] = seed;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["holds"] = holds;
  j["tail_bound"] = tail_bound;
  return j;
}

bool all_hold(const std::vector<SweepRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const SweepRecord& r) { return r.holds; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"selberg", "spacing", "pair-spacing", "radius",
                                              "chain",   "alpha-properties", "trig"};
  return names;
}

std::vector<SweepRecord> run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "all") {
    std::vector<SweepRecord> out;
    for (const auto& n : suite_names()) append(out, run_suite(n, options));
    return out;
  }
  if (name == "selberg") return selberg_suite(options);
  if (name == "spacing") return spacing_suite(options);
  if (name == "pair-spacing") return pair_spacing_suite(options);
  if (name == "radius") return radius_suite(options);
  if (name == "chain") return chain_suite(options);
  if (name == "alpha-properties") return alpha_properties_suite(options);
  if (name == "trig") return trig_suite(options);
  throw Error(ErrorKind::UsageError, "unknown suite '" + std::string(name) + "'");
}

std::vector<SweepRecord> selberg_suite(const SuiteOptions& options) {
  const Plan plan(options, {100, 12});
  const double tol = plan.slack(1e-8);
  return parallel_map<SweepRecord>(plan.trials(), [&](std::size_t t) {
    const auto seed = plan.seed(1, t);
    Rng rng(seed);
    const auto seq = random_sequence(rng, pick_n(rng, 2, plan.max_n()), seed);
    std::vector<double> c(seq.size());
    for (double& x : c) x = rng.uniform(0.2, 5.0);
    const auto h = build_h(seq, c);
    const auto report = check_selberg_identity(h, eigenpair_top(h));
    return record("selberg", seed, report.max_rel_residual, tol, report.max_rel_residual < tol);
  });
}

std::vector<SweepRecord> spacing_suite(const SuiteOptions& options) {
  const Plan plan(options, {1000, 40});
  const std::vector<double> sigmas{1.5, 2.0, 3.0, 4.0};
  std::vector<double> zetas;
  for (double s : sigmas) zetas.push_back(zeta(s));
  const auto square = ConvexWeightFunction::power(2.0);
  const auto cube = ConvexWeightFunction::power(3.0);
  std::vector<SweepRecord> out;

  // Weighted spacing bound: worst ℓ per (sequence, σ).
  for (auto& chunk : parallel_map<std::vector<SweepRecord>>(plan.trials(), [&](std::size_t t) {
         const auto seed = plan.seed(2, t);
         Rng rng(seed);
         const auto seq = random_sequence(rng, pick_n(rng, 1, plan.max_n()), seed);
         std::vector<SweepRecord> recs;
         for (std::size_t s = 0; s < sigmas.size(); ++s) {
           InequalityReport worst;
           double worst_ratio = -1.0;
           for (std::size_t ell = 1; ell <= seq.size(); ++ell) {
             const auto r = spacing_check(seq, ell, sigmas[s], seq.size(), zetas[s]);
             if (r.lhs / r.rhs > worst_ratio) {
               worst_ratio = r.lhs / r.rhs;
               worst = r;
             }
           }
           recs.push_back(at_most("preissmann-spacing", seed, worst.lhs, worst.rhs,
                                  plan.slack(1e-12 * worst.rhs), worst.tail_bound));
         }
         return recs;
       })) {
    append(out, std::move(chunk));
  }

  {
    // Unit spacing, σ = 2, 10⁶ neighbours each side: 2ζ(2) minus a tail below 2·10⁻⁶.
    const std::size_t window = 1000000;
    const auto seq = GapSequence::uniform(2 * window + 1, 1.0);
    const double lhs = spacing_sum(seq, window + 1, 2.0, window);
    const double target = kPi * kPi / 3.0;
    out.push_back(record("preissmann-spacing-uniform", 0, lhs, target,
                         std::abs(lhs - target) <= plan.slack(3e-6), 2.0 / static_cast<double>(window)));
  }

  append(out, parallel_map<SweepRecord>(plan.trials(), [&](std::size_t t) {
    const auto seed = plan.seed(3, t);
    Rng rng(seed);
    std::vector<double> a(pick_n(rng, 1, 20));
    for (double& x : a) x = rng.uniform(1.0, 3.0);
    const auto r = check_equidistance(a, cube, a.size());
    return at_most("equidistance", seed, r.lhs, r.rhs, plan.slack(1e-12));
  }));

  append(out, parallel_map<SweepRecord>(plan.trials(), [&](std::size_t t) {
    const auto seed = plan.seed(4, t);
    Rng rng(seed);
    std::vector<double> a(pick_n(rng, 2, 20));
    a[0] = rng.uniform(1.0, 3.0);
    for (std::size_t i = 1; i < a.size(); ++i) a[i] = rng.uniform(0.1, 3.0);
    const std::size_t nu = pick_n(rng, 2, a.size());
    if (!(a[nu - 2] > a[nu - 1])) a[nu - 1] = a[nu - 2] * rng.uniform(0.05, 0.95);
    const double eps = (a[nu - 2] - a[nu - 1]) * (1.0 - rng.uniform01());
    const std::size_t n = pick_n(rng, 1, a.size() - 1);
    const auto r = check_smoothing_monovariant(a, nu, eps, square, n);
    return at_most("smoothing-monovariant", seed, r.lhs, r.rhs, plan.slack(1e-12));
  }));

  append(out, parallel_map<SweepRecord>(plan.trials(), [&](std::size_t t) {
    const auto seed = plan.seed(5, t);
    Rng rng(seed);
    std::vector<double> a(pick_n(rng, 2, 40));
    a[0] = rng.uniform(1.0, 3.0);
    for (std::size_t i = 1; i < a.size(); ++i) a[i] = rng.uniform(0.05, 5.0);
    const auto r = check_fn_upper(a, square, a.size() - 1);
    return at_most("fn-upper", seed, r.lhs, r.rhs, plan.slack(1e-12));
  }));

  // Both one-sided functionals stay below ζ(σ) and add up to the scaled spacing sum.
  append(out, parallel_map<SweepRecord>(plan.trials(), [&](std::size_t t) {
    const auto seed = plan.seed(6, t);
    Rng rng(seed);
    const auto seq = random_sequence(rng, pick_n(rng, 1, plan.max_n()), seed);
    const std::size_t s = pick_n(rng, 0, sigmas.size() - 1);
    const std::size_t ell = pick_n(rng, 1, seq.size());
    const ConvexWeightFunction f{[sigma = sigmas[s]](double x) { return std::pow(x, -sigma); },
                                 zetas[s], "power"};
    const auto split = shan_split(seq, ell, f, sigmas[s]);
    const double total = split.right + split.left;
    const double scale = std::max(split.scaled_spacing_sum, 1e-300);
    const bool consistent = std::abs(total - split.scaled_spacing_sum) <= 1e-10 * scale;
    const double lhs = std::max(split.right, split.left);
    return record("shan-chain", seed, lhs, zetas[s], consistent && lhs <= zetas[s] + plan.slack(1e-12));
  }));
  return out;
}

std::vector<SweepRecord> pair_spacing_suite(const SuiteOptions& options) {
  const Plan plan(options, {500, 10});
  return parallel_map<SweepRecord>(plan.trials(), [&](std::size_t t) {
    const auto seed = plan.seed(7, t);
    Rng rng(seed);
    const auto seq = random_sequence(rng, pick_n(rng, 2, plan.max_n()), seed);
    InequalityReport worst;
    double worst_ratio = -INFINITY;
    for (std::size_t l = 1; l <= seq.size(); ++l) {
      for (std::size_t m = 1; m <= seq.size(); ++m) {
        if (l == m) continue;
        const auto r = pair_spacing_sum(seq, l, m, seq.size());
        if (r.lhs / r.rhs > worst_ratio) {
          worst_ratio = r.lhs / r.rhs;
          worst = r;
        }
      }
    }
    return at_most("preissmann-pair", seed, worst.lhs, worst.rhs, plan.slack(1e-12 * worst.rhs),
                   worst.tail_bound);
  });
}

std::vector<SweepRecord> radius_suite(const SuiteOptions& options) {
  const Plan plan(options, {1000, 12});
  const double tol = plan.slack(1e-9);
  return parallel_map<SweepRecord>(plan.trials(), [&](std::size_t t) {
    const auto seed = plan.seed(8, t);
    Rng rng(seed);
    const auto seq = random_sequence(rng, pick_n(rng, 2, plan.max_n()), seed);
    const auto h = build_h(seq);
    std::vector<double> re(seq.size());
    std::vector<double> im(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      re[i] = rng.uniform(-1.0, 1.0);
      im[i] = rng.uniform(-1.0, 1.0);
    }
    const auto r = numerical_radius_check(h, re, im);
    const bool holds = r.lhs <= r.rhs + tol * std::max(1.0, r.rhs) &&
                       r.weighted_lhs <= r.weighted_rhs + tol * std::max(1.0, r.weighted_rhs);
    return record("numerical-radius", seed, r.lhs, r.rhs, holds);
  });
}

std::vector<SweepRecord> chain_suite(const SuiteOptions& options) {
  const Plan plan(options, {100, 12});
  const auto chain = preissmann_chain();
  std::vector<SweepRecord> out;
  for (auto& chunk : parallel_map<std::vector<SweepRecord>>(plan.trials(), [&](std::size_t t) {
         const auto seed = plan.seed(9, t);
         Rng rng(seed);
         const auto seq = random_sequence(rng, pick_n(rng, 2, plan.max_n()), seed);
         const auto h = build_h(seq);
         const auto pair = eigenpair_top(h);
         const auto terms = chain_terms(seq, pair);
         return std::vector<SweepRecord>{
             at_most("s-bound", seed, terms.s, kPi * kPi / 3.0, plan.slack(1e-9)),
             at_most("mu-bound", seed, terms.mu_squared, terms.s + 2.0 * terms.t, plan.slack(1e-8)),
             at_most("mv2-preissmann", seed, pair.mu, chain.c1_upper, plan.slack(1e-9)),
         };
       })) {
    append(out, std::move(chunk));
  }

  // λ_n = n with unit weights: the radius stays below π and approaches it.
  const auto h = build_h(GapSequence::uniform(2000, 1.0), std::vector<double>(2000, 1.0));
  const double rho = spectral_radius(h);
  out.push_back(at_most("mv1-schur", 0, rho, kPi, plan.slack(1e-9)));
  out.push_back(record("schur-lower", 0, kPi - 0.05, rho, rho > kPi - 0.05));
  return out;
}

std::vector<SweepRecord> alpha_properties_suite(const SuiteOptions& options) {
  const Plan plan(options, {50, 8});
  std::vector<double> grid;
  for (int i = 0; i <= 8; ++i) grid.push_back(0.25 * i);

  std::vector<SweepRecord> out;
  for (auto& chunk : parallel_map<std::vector<SweepRecord>>(plan.trials(), [&](std::size_t t) {
         const auto seed = plan.seed(10, t);
         Rng rng(seed);
         const std::size_t n = pick_n(rng, 2, plan.max_n());
         const auto seq = random_sequence(rng, n, seed);
         std::vector<double> est;
         for (double a : grid) est.push_back(estimate_constant(a, seq).value);

         std::vector<SweepRecord> recs;
         double asym = 0.0;
         for (std::size_t i = 0; i < grid.size(); ++i) {
           const std::size_t j = grid.size() - 1 - i;
           asym = std::max(asym, std::abs(est[i] - est[j]) / est[i]);
         }
         recs.push_back(at_most("alpha-symmetry", seed, asym, 0.0, plan.slack(1e-11)));

         double worst_rise = -INFINITY;
         double rise_lhs = 0.0;
         double rise_rhs = 0.0;
         for (std::size_t i = 0; grid[i] <= 1.0; ++i) {
           for (std::size_t j = i + 1; j < grid.size() && grid[j] <= 1.0; ++j) {
             if (est[j] - est[i] > worst_rise) {
               worst_rise = est[j] - est[i];
               rise_lhs = est[j];
               rise_rhs = est[i];
             }
           }
         }
         recs.push_back(at_most("alpha-monotone", seed, rise_lhs, rise_rhs, plan.slack(1e-10)));
         recs.push_back(at_most("alpha-one-pi2-over-3", seed, est[4], kPi * kPi / 3.0, plan.slack(1e-9)));
         recs.push_back(at_most("alpha-crude", seed, *std::max_element(est.begin(), est.end()),
                                static_cast<double>(n - 1), plan.slack(1e-9)));

         std::vector<double> tv(n);
         for (double& x : tv) x = rng.uniform01();
         const WeightVector weights(tv);
         double worst_excess = -INFINITY;
         double holder_lhs = 0.0;
         double holder_rhs = 0.0;
         for (int trial = 0; trial < 10; ++trial) {
           const double a1 = rng.uniform(0.0, 2.0);
           const double a2 = rng.uniform(0.0, 2.0);
           const double theta = rng.uniform01();
           const double lhs = q_alpha(seq, weights, theta * a1 + (1.0 - theta) * a2);
           const double rhs = std::pow(q_alpha(seq, weights, a1), theta) *
                              std::pow(q_alpha(seq, weights, a2), 1.0 - theta);
           if (lhs - rhs > worst_excess) {
             worst_excess = lhs - rhs;
             holder_lhs = lhs;
             holder_rhs = rhs;
           }
         }
         recs.push_back(at_most("alpha-holder", seed, holder_lhs, holder_rhs, plan.slack(1e-10)));

         // Appending a node leaves the first N rows and columns unchanged.
         std::vector<double> nodes(seq.nodes().begin(), seq.nodes().end());
         nodes.push_back(nodes.back() + rng.uniform(0.01, 2.0));
         const auto longer = GapSequence::from_nodes(std::move(nodes));
         const double a = grid[pick_n(rng, 0, grid.size() - 1)];
         const double base = estimate_constant(a, seq).value;
         recs.push_back(at_most("alpha-window", seed, base, estimate_constant(a, longer).value,
                                plan.slack(1e-10)));
         return recs;
       })) {
    append(out, std::move(chunk));
  }

  const double ratio = cluster_lower_bound(0.0, 400) / cluster_lower_bound(0.0, 100);
  out.push_back(record("cluster-growth", 0, 1.8, ratio, ratio >= 1.8));
  for (std::size_t n : {2, 5, 10, 40}) {
    for (double a : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0}) {
      const double bound = cluster_lower_bound(a, n);
      const double value = estimate_constant(a, GapSequence::cluster(n)).value;
      out.push_back(at_most("cluster-dominance", n, bound, value, plan.slack(1e-9)));
    }
  }
  return out;
}

std::vector<SweepRecord> trig_suite(const SuiteOptions& options) {
  const Plan plan(options, {20, 6});
  std::vector<SweepRecord> out;
  for (auto& chunk : parallel_map<std::vector<SweepRecord>>(plan.trials(), [&](std::size_t t) {
         const auto seed = plan.seed(11, t);
         Rng rng(seed);
         const std::size_t m = pick_n(rng, 2, plan.max_n());
         std::vector<double> spacing(m);
         double total = 0.0;
         for (double& s : spacing) total += (s = rng.uniform(0.2, 1.0));
         std::vector<double> x(m);
         std::vector<double> tau(m);
         x[0] = rng.uniform01() * spacing[0] / total;
         for (std::size_t i = 1; i < m; ++i) x[i] = x[i - 1] + spacing[i] / total;
         for (double& w : tau) w = rng.uniform(0.1, 1.0);
         const TrigConfig cfg(x, tau);

         std::vector<double> gaps;
         double trig_side = 0.0;
         for (std::size_t k : {25, 50, 100, 200}) {
           const auto r = periodized_equivalence_check(cfg, k);
           gaps.push_back(std::abs(r.gap));
           trig_side = r.trig_side;
         }
         bool shrinking = true;
         for (std::size_t i = 1; i < gaps.size(); ++i) shrinking = shrinking && gaps[i] < gaps[i - 1];
         std::vector<SweepRecord> recs;
         recs.push_back(record("trig-line-doubling", seed, gaps.back(), gaps[gaps.size() - 2], shrinking));
         recs.push_back(at_most("trig-line-k200", seed, gaps.back() / trig_side, 0.02, 0.0));

         std::vector<double> even(m);
         const double shift = rng.uniform(-3.0, 3.0);
         std::vector<double> rotated(m);
         for (std::size_t i = 0; i < m; ++i) {
           even[i] = static_cast<double>(i) / static_cast<double>(m);
           rotated[i] = even[i] + shift;
         }
         const std::vector<double> equal(m, 1.0);
         const double v0 = trig_form_value(TrigConfig(even, equal));
         const double v1 = trig_form_value(TrigConfig(rotated, equal));
         recs.push_back(at_most("trig-rotation", seed, std::abs(v1 - v0), 0.0, plan.slack(1e-12) * v0));
         return recs;
       })) {
    append(out, std::move(chunk));
  }

  for (double b : {0.3, 0.5, 0.7}) {
    auto residual = [b](std::size_t l) {
      const double ll = static_cast<double>(l);
      return (l_sum(b, l) - ll * ll * ll / (6.0 * b * b) + ll * ll * std::log(ll) / (kPi * kPi * b * b)) /
             (ll * ll);
    };
    const double r1 = residual(1000);
    const double r2 = residual(2000);
    out.push_back(at_most("l-sum-residual", static_cast<std::uint64_t>(b * 10), std::abs(r2 - r1) / std::abs(r1),
                          0.05, 0.0));
  }

  const auto g = big_g(5, 0.14);
  const double v1000 = trig_form_value(construction_config(5, 0.14, 1000, g.u_star)) / (1.0 + g.u_star * g.u_star);
  const double v2000 = trig_form_value(construction_config(5, 0.14, 2000, g.u_star)) / (1.0 + g.u_star * g.u_star);
  out.push_back(record("construction-finite", 2000, v2000, g.g_value,
                       v1000 <= v2000 && v2000 <= g.g_value + plan.slack(5e-3)));

  const auto cot = cot_limit_check(1, 0.25, 4000);
  out.push_back(record("cot-limit", 4000, cot.gap_l, 1e-2, cot.gap_l < 1e-2 && cot.shrinking));

  const auto table = scan(1, 25, 99);
  const double ceiling = (1.0 + std::sqrt(6.0 / 5.0)) / 3.0;
  out.push_back(at_most("g-below-preissmann", 0, table.rows[table.argmax].result.g_value, ceiling,
                        plan.slack(1e-9)));
  return out;
}

}  // namespace hcl
