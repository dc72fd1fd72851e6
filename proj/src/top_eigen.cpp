#include "hcl/top_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcl/error.hpp"
#include "hcl/rng.hpp"

namespace hcl {
namespace {

using Eigen::VectorXd;

void apply_to(const SymmetricOperator& apply, const VectorXd& x, VectorXd& y) {
  apply(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
        std::span<double>(y.data(), static_cast<std::size_t>(y.size())));
}

template <typename Basis>
void orthogonalize(const Basis& basis, VectorXd& w) {
  // Two passes of classical Gram-Schmidt.
  for (int pass = 0; pass < 2; ++pass) {
    const VectorXd coeffs = basis.transpose() * w;
    w.noalias() -= basis * coeffs;
  }
}

void fill_fallback(VectorXd& w, std::uint64_t index) {
  Rng rng(derive_seed(0x5EED, index));
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = rng.uniform(-1.0, 1.0);
}

}  // namespace

TopEigenpair top_eigen_symmetric(std::size_t n, const SymmetricOperator& apply,
                                 const TopEigenOptions& options) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "top_eigen: empty operator");
  const auto dim = static_cast<Eigen::Index>(n);
  const Eigen::Index m = std::min<Eigen::Index>(dim, std::max<std::size_t>(2, options.krylov_dim));

  VectorXd start = VectorXd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(n)));
  Eigen::MatrixXd basis(dim, m);
  Eigen::MatrixXd images(dim, m);
  VectorXd w(dim);

  TopEigenpair best;
  double best_ratio = INFINITY;
  std::size_t matvecs = 0;

  while (true) {
    basis.col(0) = start;
    Eigen::Index steps = 0;
    double norm_estimate = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      apply_to(apply, basis.col(j), w);
      ++matvecs;
      images.col(j) = w;
      norm_estimate = std::max(norm_estimate, w.norm());
      steps = j + 1;
      if (j + 1 == m) break;
      orthogonalize(basis.leftCols(j + 1), w);
      double beta = w.norm();
      if (beta <= 1e-12 * norm_estimate) {
        // The Krylov space is (numerically) invariant; extend the basis with
        // a fixed pseudo-random direction so the rest of the space stays reachable.
        fill_fallback(w, static_cast<std::uint64_t>(j));
        orthogonalize(basis.leftCols(j + 1), w);
        beta = w.norm();
        if (beta <= 1e-8) break;
      }
      basis.col(j + 1) = w / beta;
    }

    // Rayleigh-Ritz on span(basis). Only orthonormality of the basis is
    // assumed, not a three-term recurrence.
    Eigen::MatrixXd projected = basis.leftCols(steps).transpose() * images.leftCols(steps);
    projected = (0.5 * (projected + projected.transpose())).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(projected);
    const double theta = small.eigenvalues()(steps - 1);
    VectorXd ritz = basis.leftCols(steps) * small.eigenvectors().col(steps - 1);
    ritz.normalize();

    VectorXd image(dim);
    apply_to(apply, ritz, image);
    ++matvecs;
    const double residual = (image - theta * ritz).norm();
    const double ratio = residual == 0.0 ? 0.0 : residual / std::abs(theta);

    if (ratio < best_ratio) {
      best_ratio = ratio;
      best.value = theta;
      best.vector.assign(ritz.data(), ritz.data() + dim);
      best.residual = residual;
    }
    best.matvecs = matvecs;
    if (ratio <= options.target_residual) return best;
    if (matvecs >= options.max_matvecs) {
      if (best_ratio <= options.accept_residual) return best;
      throw Error(ErrorKind::NoConvergence,
                  "top eigenpair residual " + std::to_string(best_ratio) + " after " +
                      std::to_string(matvecs) + " operator applications");
    }
    start = ritz;
  }
}

TopEigenpair top_eigen_nonneg_sym(const Eigen::MatrixXd& matrix, const TopEigenOptions& options) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw Error(ErrorKind::InvalidArgument, "matrix must be square and nonempty");
  }
  const Eigen::Index n = matrix.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double a = matrix(i, j);
      if (!(a >= 0.0)) {
        throw Error(ErrorKind::NegativeEntry,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is negative or NaN");
      }
      if (j > i) {
        const double b = matrix(j, i);
        if (std::abs(a - b) > 1e-12 * std::max({1.0, a, b})) {
          throw Error(ErrorKind::NotSymmetric,
                      "entries (" + std::to_string(i) + "," + std::to_string(j) + ") differ");
        }
      }
    }
  }

  auto result = top_eigen_symmetric(
      static_cast<std::size_t>(n),
      [&matrix](std::span<const double> x, std::span<double> y) {
        const Eigen::Index len = static_cast<Eigen::Index>(x.size());
        Eigen::Map<VectorXd>(y.data(), len).noalias() =
            matrix * Eigen::Map<const VectorXd>(x.data(), len);
      },
      options);

  // For a nonnegative matrix, |v| of any top eigenvector is again a top eigenvector.
  for (double& x : result.vector) x = std::abs(x);
  return result;
}

}  // namespace hcl
