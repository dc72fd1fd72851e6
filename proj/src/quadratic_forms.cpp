#include "hcl/quadratic_forms.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hcl/error.hpp"
#include "hcl/parallel.hpp"
#include "hcl/rng.hpp"
#include "hcl/summation.hpp"
#include "hcl/top_eigen.hpp"

namespace hcl {
namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 2.0)) {
    throw Error(ErrorKind::AlphaOutOfRange, "alpha must lie in [0, 2], got " + std::to_string(alpha));
  }
}

std::vector<double> powers(std::span<const double> deltas, double exponent) {
  std::vector<double> out(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) out[i] = std::pow(deltas[i], exponent);
  return out;
}

GapSequence from_gaps(const std::vector<double>& gaps) {
  std::vector<double> nodes(gaps.size() + 1, 0.0);
  for (std::size_t k = 0; k < gaps.size(); ++k) nodes[k + 1] = nodes[k] + gaps[k];
  return GapSequence::from_nodes(std::move(nodes));
}

}  // namespace

AlphaFormMatrix::AlphaFormMatrix(const GapSequence& seq, double alpha)
    : source_(seq), alpha_(alpha) {
  require_alpha(alpha);
  const std::size_t n = seq.size();
  const auto lambda = seq.active_nodes();
  const auto left = powers(seq.deltas(), 2.0 - alpha);
  const auto right = powers(seq.deltas(), alpha);
  entries_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == m) continue;
      const double d = lambda[m] - lambda[k];
      entries_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) = left[m] * right[k] / (d * d);
    }
  }
}

Eigen::MatrixXd AlphaFormMatrix::symmetrized() const {
  return 0.5 * (entries_ + entries_.transpose());
}

nlohmann::json ConstantEstimate::to_json(const std::string& config_name) const {
  return nlohmann::json{{"alpha", alpha},
                        {"n", n},
                        {"config", config_name},
                        {"value", value},
                        {"witness", std::vector<double>(witness.values().begin(), witness.values().end())}};
}

double q_alpha(const GapSequence& seq, const WeightVector& t, double alpha) {
  require_alpha(alpha);
  if (t.size() != seq.size()) {
    throw Error(ErrorKind::LengthMismatch, "weights and sequence differ in length");
  }
  const std::size_t n = seq.size();
  const auto lambda = seq.active_nodes();
  const auto left = powers(seq.deltas(), 2.0 - alpha);
  const auto right = powers(seq.deltas(), alpha);
  std::vector<double> row_terms;
  row_terms.reserve(n);
  std::vector<double> row_sums(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    row_terms.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == m) continue;
      const double d = lambda[m] - lambda[k];
      row_terms.push_back(left[m] * right[k] * t[m] * t[k] / (d * d));
    }
    row_sums[m] = pairwise_sum(row_terms);
  }
  return pairwise_sum(row_sums);
}

ConstantEstimate estimate_constant(double alpha, const GapSequence& seq) {
  const AlphaFormMatrix form(seq, alpha);
  const auto top = top_eigen_nonneg_sym(form.symmetrized());
  return ConstantEstimate{alpha, seq.size(), top.value, seq, WeightVector(top.vector)};
}

double uniform_lower_bound(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "uniform_lower_bound needs n >= 2");
  double squares = 0.0;
  double harmonic = 0.0;
  for (std::size_t k = n - 1; k >= 1; --k) {
    const double x = static_cast<double>(k);
    squares += 1.0 / (x * x);
    harmonic += 1.0 / x;
  }
  return 2.0 * squares - 2.0 / static_cast<double>(n) * harmonic;
}

double cluster_lower_bound(double alpha, std::size_t n) {
  require_alpha(alpha);
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "cluster_lower_bound needs n >= 2");
  const double nn = static_cast<double>(n);
  const double prefactor = std::sqrt(nn + 1.0) / (2.0 * std::pow(nn, alpha + 1.0));
  std::vector<double> terms;
  terms.reserve(n - 1);
  for (std::size_t m = 2; m <= n; ++m) {
    const double x = 1.0 + static_cast<double>(m - 2) / nn;
    terms.push_back(prefactor / (x * x));
  }
  return pairwise_sum(terms);
}

ConstantEstimate search_configuration(double alpha, std::size_t n, const SearchOptions& options) {
  require_alpha(alpha);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "search needs n >= 1");
  if (options.restarts == 0) throw Error(ErrorKind::InvalidArgument, "search needs restarts >= 1");

  auto climb = [&](std::size_t restart) {
    Rng rng(derive_seed(options.seed, restart));
    std::vector<double> gaps(n + 1);
    for (double& g : gaps) g = rng.uniform(1.0, 10.0);
    double best = estimate_constant(alpha, from_gaps(gaps)).value;
    double step = 0.5;
    for (std::size_t round = 0; round < options.rounds; ++round) {
      bool improved = false;
      for (std::size_t i = 0; i < gaps.size(); ++i) {
        for (const double factor : {1.0 + step, 1.0 / (1.0 + step)}) {
          const double saved = gaps[i];
          gaps[i] = saved * factor;
          const double value = estimate_constant(alpha, from_gaps(gaps)).value;
          if (value > best) {
            best = value;
            improved = true;
            break;
          }
          gaps[i] = saved;
        }
      }
      if (!improved) step *= 0.5;
      if (step < 1e-12) break;
    }
    return gaps;
  };

  const auto candidates = parallel_map<std::vector<double>>(options.restarts, climb);
  ConstantEstimate best = estimate_constant(alpha, from_gaps(candidates.front()));
  for (std::size_t r = 1; r < candidates.size(); ++r) {
    auto e = estimate_constant(alpha, from_gaps(candidates[r]));
    if (e.value > best.value) best = std::move(e);
  }
  return best;
}

}  // namespace hcl
