#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hcl/gap_sequence.hpp"

namespace hcl {

/// h_{mn} = c_m c_n / (λ_m − λ_n) for m ≠ n, zero diagonal. Real and
/// skew-symmetric, so its eigenvalues are iμ with μ real.
class SkewHilbertMatrix {
 public:
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  std::span<const double> weights() const noexcept { return weights_; }
  const GapSequence& source() const noexcept { return source_; }
  std::size_t size() const noexcept { return weights_.size(); }

 private:
  friend SkewHilbertMatrix build_h(const GapSequence&, std::optional<std::vector<double>>);
  SkewHilbertMatrix(GapSequence source, std::vector<double> weights, Eigen::MatrixXd entries)
      : source_(std::move(source)), weights_(std::move(weights)), entries_(std::move(entries)) {}

  GapSequence source_;
  std::vector<double> weights_;
  Eigen::MatrixXd entries_;
};

/// Eigenpair (iμ, u) of a real skew-symmetric matrix with u = u_re + i·u_im of
/// unit norm, so that H·u_re = −μ·u_im and H·u_im = μ·u_re.
struct ComplexEigenpair {
  double mu = 0.0;
  std::vector<double> u_re;
  std::vector<double> u_im;

  /// max(‖H u_re + μ u_im‖, ‖H u_im − μ u_re‖).
  double residual(const SkewHilbertMatrix& h) const;
};

/// Weights default to c_n = √δ_n. Throws NonpositiveWeight or LengthMismatch.
SkewHilbertMatrix build_h(const GapSequence& seq,
                          std::optional<std::vector<double>> weights = std::nullopt);

/// |μ_max| = √(top eigenvalue of HᵀH).
double spectral_radius(const SkewHilbertMatrix& h);

/// Built from a top eigenvector v of HᵀH: u = v − (i/μ)Hv, normalized, μ > 0.
/// Throws ZeroSpectrum when H has no nonzero eigenvalue.
ComplexEigenpair eigenpair_top(const SkewHilbertMatrix& h);

struct SelbergReport {
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;  // relative to μ²
  std::vector<double> lhs;        // μ²|u_m|²
  std::vector<double> rhs;
};

/// Per-coordinate check of
///   μ²|u_m|² = Σ_{n≠m} c_m²c_n²|u_n|²/(λ_m−λ_n)² + 2Σ_{n≠m} c_m³c_n Re(ū_m u_n)/(λ_m−λ_n)².
/// Throws InvalidArgument if the pair is not an eigenpair of h to 1e−9·|μ|.
SelbergReport check_selberg_identity(const SkewHilbertMatrix& h, const ComplexEigenpair& pair);

/// C₁ = √(π²/3 + 2·c3): the Montgomery–Vaughan constant implied by a
/// constant c3 for the α = 1/2 form. Throws InvalidArgument for c3 < 0.
double two_forms_bound(double c3);

struct PreissmannChain {
  double s_coeff = 0.0;   // π⁴/45
  double t_coeff = 0.0;   // 2π²/3
  double c3_upper = 0.0;  // positive root of x² − t·x − s
  double c1_upper = 0.0;  // two_forms_bound(c3_upper)
};

/// Solves U² ≤ V(sV + tU) for the ratio U/V.
PreissmannChain preissmann_chain();

struct NumericalRadiusReport {
  double lhs = 0.0;           // |Σ_{m≠n} c_m c_n z_m z̄_n/(λ_m−λ_n)|
  double rhs = 0.0;           // ρ(H)·Σ|z_n|²
  double weighted_lhs = 0.0;  // |Σ_{m≠n} z_m z̄_n/(λ_m−λ_n)|
  double weighted_rhs = 0.0;  // ρ(H)·Σ|z_n|²/c_n²
  bool holds = false;
};

/// Both forms of the numerical-radius bound for one complex vector z.
/// Pass the radius to avoid recomputing it per trial.
NumericalRadiusReport numerical_radius_check(const SkewHilbertMatrix& h, std::span<const double> z_re,
                                             std::span<const double> z_im,
                                             std::optional<double> radius = std::nullopt);

/// The two pieces of μ² ≤ S + 2T for a unit eigenvector u of H built with
/// c_n = √δ_n: S = Σ_{m≠n} δ_mδ_n|u_n|²/(λ_m−λ_n)²,
/// T = Σ_{m≠n} δ_m^{3/2}δ_n^{1/2}|u_m||u_n|/(λ_m−λ_n)².
struct ChainTerms {
  double mu_squared = 0.0;
  double s = 0.0;
  double t = 0.0;
};

ChainTerms chain_terms(const GapSequence& seq, const ComplexEigenpair& pair);

}  // namespace hcl
