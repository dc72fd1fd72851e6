#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hcl {

/// A finite window λ_1 < … < λ_N of a strictly increasing sequence, stored with
/// one ghost node on each side (λ_0 and λ_{N+1}) so that every active index has
/// the local gap δ_k = min(λ_k − λ_{k−1}, λ_{k+1} − λ_k).
///
/// Indices follow the mathematical convention: node(0) and node(N+1) are the
/// ghosts, delta(k) is defined for 1 ≤ k ≤ N. Immutable after construction.
class GapSequence {
 public:
  /// Throws NotIncreasing, TooShort, or InvalidArgument (non-finite node).
  static GapSequence from_nodes(std::vector<double> nodes);

  /// λ_k = k·spacing for k = 0 … n+1.
  static GapSequence uniform(std::size_t n, double spacing);

  /// λ_0 = 0, λ_1 = 1, then λ_{2+ℓ} = 2 + ℓ/n: one unit-gap node followed by a
  /// cluster of spacing 1/n.
  static GapSequence cluster(std::size_t n);

  /// Gaps drawn uniformly on [min_gap, 10·min_gap] from a seeded generator.
  static GapSequence random(std::size_t n, double min_gap, std::uint64_t seed);

  static GapSequence from_json(const nlohmann::json& j);
  /// One node per line; blank lines and lines starting with '#' are skipped.
  static GapSequence from_csv(std::istream& in);

  std::size_t size() const noexcept { return nodes_.size() - 2; }

  double node(std::size_t k) const;
  double delta(std::size_t k) const;

  /// All nodes including both ghosts.
  std::span<const double> nodes() const noexcept { return nodes_; }
  /// λ_1 … λ_N.
  std::span<const double> active_nodes() const noexcept {
    return std::span<const double>(nodes_).subspan(1, size());
  }
  /// δ_1 … δ_N, zero-based.
  std::span<const double> deltas() const noexcept { return deltas_; }

  double min_gap() const noexcept { return min_gap_; }
  double max_gap() const noexcept { return max_gap_; }

  nlohmann::json to_json() const;

  /// Same nodes shifted by c.
  GapSequence translated(double c) const;
  /// Same nodes multiplied by s > 0.
  GapSequence scaled(double s) const;

 private:
  explicit GapSequence(std::vector<double> nodes);

  std::vector<double> nodes_;
  std::vector<double> deltas_;
  double min_gap_ = 0.0;
  double max_gap_ = 0.0;
};

/// Nonnegative coefficients t_1 … t_N.
class WeightVector {
 public:
  /// Throws InvalidArgument on a negative or non-finite entry.
  explicit WeightVector(std::vector<double> values);

  /// Throws LengthMismatch when the lengths differ.
  static WeightVector for_sequence(const GapSequence& seq, std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

}  // namespace hcl
