#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcl/gap_sequence.hpp"

namespace hcl {

/// Left side, right side and verdict of one numerical inequality check.
/// tail_bound bounds what a truncated series left out; zero for finite sums.
struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double tail_bound = 0.0;
};

/// Riemann zeta for real σ > 1: Neumaier-compensated direct sum of the first
/// 10⁶ terms plus an Euler–Maclaurin tail through the x^{−σ−1} term.
/// Throws SigmaOutOfRange for σ ≤ 1.
double zeta(double sigma);

/// A weight f on [1, ∞) assumed convex, weakly decreasing, nonnegative and
/// summable. Only spot_check() looks at whether that is true.
struct ConvexWeightFunction {
  std::function<double(double)> evaluate;
  std::optional<double> tail_sum;  // Σ_{j≥1} f(j) when known
  std::string name;

  double operator()(double x) const { return evaluate(x); }

  /// f(x) = x^{−σ}, with tail_sum = ζ(σ).
  static ConvexWeightFunction power(double sigma);
};

struct WeightFunctionDiagnostic {
  std::size_t samples = 0;
  std::size_t convexity_violations = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t negativity_violations = 0;

  bool ok() const {
    return convexity_violations == 0 && monotonicity_violations == 0 && negativity_violations == 0;
  }
};

/// Samples random triples in [1, 10⁶] and counts violations of convexity,
/// monotonicity and nonnegativity. A diagnostic, never an error.
WeightFunctionDiagnostic spot_check(const ConvexWeightFunction& f, std::uint64_t seed,
                                    std::size_t samples = 1000);

/// F_n(x) = Σ_{k≤n} min(x_k, x_{k+1}) f(x_1 + … + x_k), x zero-based.
/// Needs 1 ≤ n ≤ x.size() − 1 (IndexOutOfRange), x positive with x_1 ≥ 1.
double f_n_functional(std::span<const double> x, const ConvexWeightFunction& f, std::size_t n);

/// Σ_{k≤n} a_k f(λ_k) against Σ_{j≤⌊λ_n⌋} f(j) + {λ_n} f(⌊λ_n⌋+1), with
/// λ_k the partial sums of a. Requires every a_k ≥ 1.
InequalityReport check_equidistance(std::span<const double> a, const ConvexWeightFunction& f,
                                    std::size_t n);

/// F_n(a) against F_n(b), where b raises a_ν by eps (ν one-based, ν ≥ 2).
/// Throws NotDescendingAtNu unless a_{ν−1} > a_ν, EpsTooLarge when
/// eps > a_{ν−1} − a_ν, InvalidArgument when eps ≤ 0.
InequalityReport check_smoothing_monovariant(std::span<const double> a, std::size_t nu, double eps,
                                             const ConvexWeightFunction& f, std::size_t n);

/// F_n(a) against Σ_{j≥1} f(j); f must carry a tail_sum.
InequalityReport check_fn_upper(std::span<const double> a, const ConvexWeightFunction& f,
                                std::size_t n);

/// Σ_{k≠ℓ, |k−ℓ|≤window} δ_k / |λ_k − λ_ℓ|^σ over the active indices.
/// All terms are positive, so this is a lower bound for the full series.
double spacing_sum(const GapSequence& seq, std::size_t ell, double sigma, std::size_t window);

/// spacing_sum against 2ζ(σ)/δ_ℓ^{σ−1}. The tail bound covers the omitted
/// terms of any continuation whose gaps stay within the sequence's
/// [min_gap, max_gap]. Pass zeta_sigma to skip recomputing ζ(σ).
InequalityReport spacing_check(const GapSequence& seq, std::size_t ell, double sigma,
                               std::size_t window, std::optional<double> zeta_sigma = {});

/// Σ_{k≠ℓ,m} δ_k / ((λ_k−λ_ℓ)²(λ_k−λ_m)²) over indices within `window` of ℓ or m,
/// against π²(δ_ℓ+δ_m)/(3δ_ℓδ_m(λ_ℓ−λ_m)²) − 3(δ_ℓ+δ_m)/(λ_ℓ−λ_m)⁴.
/// Throws SameIndex for ℓ = m.
InequalityReport pair_spacing_sum(const GapSequence& seq, std::size_t ell, std::size_t m,
                                  std::size_t window);

/// The two one-sided normalized gap sequences around ℓ and their F-values
/// under f(x) = x^{−σ}:
///   a_n = (λ_{ℓ+n} − λ_{ℓ+n−1})/δ_ℓ,  b_n = (λ_{ℓ−n+1} − λ_{ℓ−n})/δ_ℓ.
/// right + left equals δ_ℓ^{σ−1}·spacing_sum over the whole window.
struct ShanSplit {
  std::vector<double> right_gaps;
  std::vector<double> left_gaps;
  double right = 0.0;
  double left = 0.0;
  double scaled_spacing_sum = 0.0;
};

ShanSplit shan_split(const GapSequence& seq, std::size_t ell, const ConvexWeightFunction& power_f,
                     double sigma);

}  // namespace hcl
