#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hcl {

/// y ← A·x for a symmetric operator A.
using SymmetricOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

struct TopEigenOptions {
  std::size_t max_matvecs = 100000;
  std::size_t krylov_dim = 64;
  /// Stop as soon as ‖Av − θv‖ ≤ target·|θ|.
  double target_residual = 1e-12;
  /// When the matvec budget runs out, the best pair is still returned if its
  /// residual is at or below this level; otherwise NoConvergence is raised.
  double accept_residual = 1e-10;
};

struct TopEigenpair {
  double value = 0.0;
  std::vector<double> vector;  // unit 2-norm
  double residual = 0.0;       // ‖Av − θv‖₂ at return
  std::size_t matvecs = 0;
};

/// Largest algebraic eigenvalue of a symmetric operator of dimension n and a
/// unit eigenvector for it.
///
/// Restarted Lanczos with full reorthogonalization and an explicit
/// Rayleigh-Ritz step on the stored images A·V. The start vector is the
/// all-equal unit vector; if the Krylov space becomes invariant early, the
/// basis is extended by fixed pseudo-random directions. Every step is a fixed
/// sequence of floating-point operations, so repeated calls return
/// bit-identical results. Each cycle restarts from the current top Ritz vector.
TopEigenpair top_eigen_symmetric(std::size_t n, const SymmetricOperator& apply,
                                 const TopEigenOptions& options = {});

/// Perron root and a nonnegative unit Perron vector of an entrywise
/// nonnegative symmetric matrix, i.e. max tᵀMt over t ≥ 0 with ‖t‖₂ = 1.
///
/// Throws NotSymmetric (asymmetry above 1e-12 relative), NegativeEntry, or
/// NoConvergence.
TopEigenpair top_eigen_nonneg_sym(const Eigen::MatrixXd& matrix,
                                  const TopEigenOptions& options = {});

}  // namespace hcl
