#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "hcl/gap_sequence.hpp"

namespace hcl {

/// The kernel M_{mn} = δ_m^{2−α} δ_n^α / (λ_m − λ_n)² of the α-family, zero on
/// the diagonal. Not symmetric unless α = 1; Mᵀ at α equals M at 2 − α.
class AlphaFormMatrix {
 public:
  /// Throws AlphaOutOfRange unless 0 ≤ α ≤ 2.
  AlphaFormMatrix(const GapSequence& seq, double alpha);

  double alpha() const noexcept { return alpha_; }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  const GapSequence& source() const noexcept { return source_; }

  /// (M + Mᵀ)/2.
  Eigen::MatrixXd symmetrized() const;

 private:
  GapSequence source_;
  double alpha_;
  Eigen::MatrixXd entries_;
};

/// Best value of tᵀ Sym(M) t over unit t ≥ 0 for one configuration. This is
/// the sharp constant for that configuration and a lower bound for the
/// supremum over all configurations of the same length.
struct ConstantEstimate {
  double alpha = 0.0;
  std::size_t n = 0;
  double value = 0.0;
  GapSequence config;
  WeightVector witness;

  nlohmann::json to_json(const std::string& config_name) const;
};

/// Σ_{m≠n} δ_m^{2−α} δ_n^α t_m t_n / (λ_m − λ_n)², pairwise-summed.
/// Throws AlphaOutOfRange or LengthMismatch.
double q_alpha(const GapSequence& seq, const WeightVector& t, double alpha);

ConstantEstimate estimate_constant(double alpha, const GapSequence& seq);

/// 2Σ_{k<n} 1/k² − (2/n)Σ_{k<n} 1/k: the form value for λ_k = k with equal
/// weights. Increases to π²/3. Needs n ≥ 2.
double uniform_lower_bound(std::size_t n);

/// Σ_{m=2}^{n} √(n+1) / (2 n^{α+1} (1 + (m−2)/n)²): the cross terms between the
/// isolated node and the cluster of GapSequence::cluster(n) under a fixed
/// feasible weight. Needs 0 ≤ α ≤ 2 and n ≥ 2.
double cluster_lower_bound(double alpha, std::size_t n);

struct SearchOptions {
  std::size_t restarts = 8;
  std::size_t rounds = 200;
  std::uint64_t seed = 0;
};

/// Heuristic push towards the supremum over configurations of length n:
/// seeded random gap vectors, each improved by multiplicative coordinate
/// hill-climbing on the n + 1 gaps with step halving. Not certified.
ConstantEstimate search_configuration(double alpha, std::size_t n, const SearchOptions& options);

}  // namespace hcl
