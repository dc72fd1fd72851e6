#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hcl/gap_sequence.hpp"

namespace hcl {

/// ‖x‖: distance from x to the nearest integer.
double torus_distance(double x);

/// Points on ℝ/ℤ with nonnegative weights. d_m is the distance from x_m to its
/// nearest other point on the circle (1 when there is only one point).
class TrigConfig {
 public:
  /// Throws LengthMismatch, InvalidArgument (empty, negative weight) or
  /// SeparationTooSmall when two points are within 1e−9 of each other mod 1.
  TrigConfig(std::vector<double> points, std::vector<double> weights);

  std::size_t size() const noexcept { return points_.size(); }
  std::span<const double> points() const noexcept { return points_; }
  std::span<const double> gaps() const noexcept { return gaps_; }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  std::vector<double> points_;
  std::vector<double> gaps_;
  std::vector<double> weights_;
};

/// (1/3)Σ d_m²τ_m² + Σ_{m≠n} d_m^{3/2} d_n^{1/2} τ_m τ_n / sin²(π(x_m − x_n)).
double trig_form_value(const TrigConfig& cfg);

/// Line configuration obtained by repeating cfg over k_periods unit periods:
/// λ_{kM+m} = k + x_m with t_{kM+m} = τ_m, plus one ghost node on each side
/// taken from the neighbouring periods.
struct PeriodizedLine {
  GapSequence seq;
  WeightVector weights;
};

PeriodizedLine periodize(const TrigConfig& cfg, std::size_t k_periods);

struct EquivalenceReport {
  double line_side = 0.0;  // α = 1/2 form of the periodized line, divided by π²K
  double trig_side = 0.0;
  double gap = 0.0;        // line_side − trig_side
};

/// Requires k_periods ≥ 2 and points sorted with x_1 < … < x_M < x_1 + 1.
EquivalenceReport periodized_equivalence_check(const TrigConfig& cfg, std::size_t k_periods);

/// Σ_{ℓ=1}^{L} (L + 1 − ℓ) / sin²(πℓB/L) for 0 < B < 1, L ≥ 1.
double l_sum(double b, std::size_t l);

struct Kappas {
  double kappa0 = 0.0;
  double kappa1 = 0.0;
};

/// κ₀ = A²/3 + (2A²/K) Σ_{k<K} (K−k)/sin²(πkA),
/// κ₁ = (2/π) √(A³/(BK)) Σ_{k≤K} cot(πkA),  B = 1 − (K+1)A.
/// Throws AOutOfRange unless 0 < A < 1/(K+1); CotangentPole if some kA is
/// numerically an integer.
Kappas kappas(std::size_t k, double a);

/// g(u) = (κ₀ + κ₁u + u²/3) / (1 + u²). Throws InvalidArgument for u < 0.
double g_of_u(double kappa0, double kappa1, double u);

struct ConstructionResult {
  std::size_t k = 0;
  double a = 0.0;
  double b = 0.0;
  double kappa0 = 0.0;
  double kappa1 = 0.0;
  double u_star = 0.0;   // +∞ when the supremum is only approached as u → ∞
  double g_value = 0.0;  // G_K(A) = max_{u≥0} g(u)
};

/// Closed-form maximum of g over u ≥ 0 for the K-point plus cluster
/// construction.
ConstructionResult big_g(std::size_t k, double a);

struct ScanRow {
  double x = 0.0;  // A·(K + 1)
  ConstructionResult result;
};

struct ScanTable {
  std::vector<ScanRow> rows;  // sorted by (K, x)
  std::size_t argmax = 0;     // first row attaining the largest G
};

/// big_g at A = x/(K+1) for every K in [k_min, k_max] and x = j/(a_steps+1),
/// j = 1 … a_steps. Rows are evaluated in parallel and returned in (K, x) order.
ScanTable scan(std::size_t k_min, std::size_t k_max, std::size_t a_steps);

struct CotLimitReport {
  double closed_form = 0.0;  // (2/(πB)) Σ_{k≤K} cot(πkA)
  double average_l = 0.0;    // (1/L) Σ_k Σ_{ℓ=0}^{L} 1/sin²(π(kA + ℓB/L))
  double average_2l = 0.0;   // same with 2L
  double gap_l = 0.0;        // |average − closed| / closed
  double gap_2l = 0.0;
  bool shrinking = false;
};

/// Needs l ≥ 10.
CotLimitReport cot_limit_check(std::size_t k, double a, std::size_t l);

/// The finite construction: x_k = kA (1 ≤ k ≤ K) with weight 1/√K, and
/// x_{K+ℓ+1} = (K+1)A + ℓB/L (0 ≤ ℓ ≤ L) with weight u/√(L+1).
/// Needs L ≥ B/A and u ≥ 0.
TrigConfig construction_config(std::size_t k, double a, std::size_t l, double u);

/// Left side of the trigonometric inequality for construction_config,
/// assembled term by term from the separated sums (the K-block, the L-block via
/// l_sum, and the cross block). Equal to trig_form_value(construction_config).
double construction_left_side(std::size_t k, double a, std::size_t l, double u);

}  // namespace hcl
