#include "hcl/hilbert_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "hcl/error.hpp"
#include "hcl/top_eigen.hpp"

namespace hcl {
namespace {

using Eigen::Index;
using Eigen::Map;
using Eigen::VectorXd;

constexpr double kPi = std::numbers::pi;

Map<const VectorXd> as_vector(std::span<const double> x) {
  return Map<const VectorXd>(x.data(), static_cast<Index>(x.size()));
}

TopEigenpair gram_top(const SkewHilbertMatrix& h) {
  const auto& a = h.entries();
  VectorXd tmp(a.rows());
  // HᵀH x = −H(Hx).
  return top_eigen_symmetric(h.size(), [&](std::span<const double> x, std::span<double> y) {
    tmp.noalias() = a * as_vector(x);
    Map<VectorXd>(y.data(), static_cast<Index>(y.size())).noalias() = -(a * tmp);
  });
}

}  // namespace

double ComplexEigenpair::residual(const SkewHilbertMatrix& h) const {
  const auto re = as_vector(u_re);
  const auto im = as_vector(u_im);
  const double r1 = (h.entries() * re + mu * im).norm();
  const double r2 = (h.entries() * im - mu * re).norm();
  return std::max(r1, r2);
}

SkewHilbertMatrix build_h(const GapSequence& seq, std::optional<std::vector<double>> weights) {
  const std::size_t n = seq.size();
  std::vector<double> c;
  if (weights) {
    if (weights->size() != n) {
      throw Error(ErrorKind::LengthMismatch, "weights must have length N");
    }
    c = std::move(*weights);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(c[i] > 0.0) || !std::isfinite(c[i])) {
        throw Error(ErrorKind::NonpositiveWeight, "weight " + std::to_string(i + 1) + " is not positive");
      }
    }
  } else {
    c.resize(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = std::sqrt(seq.deltas()[i]);
  }

  const auto lambda = seq.active_nodes();
  Eigen::MatrixXd entries = Eigen::MatrixXd::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = m + 1; k < n; ++k) {
      const double v = c[m] * c[k] / (lambda[m] - lambda[k]);
      entries(static_cast<Index>(m), static_cast<Index>(k)) = v;
      entries(static_cast<Index>(k), static_cast<Index>(m)) = -v;
    }
  }
  return SkewHilbertMatrix(seq, std::move(c), std::move(entries));
}

double spectral_radius(const SkewHilbertMatrix& h) {
  return std::sqrt(std::max(0.0, gram_top(h).value));
}

ComplexEigenpair eigenpair_top(const SkewHilbertMatrix& h) {
  const auto top = gram_top(h);
  const double scale = h.entries().cwiseAbs().maxCoeff();
  if (!(top.value > 1e-24 * scale * scale) || scale == 0.0) {
    throw Error(ErrorKind::ZeroSpectrum, "matrix has no nonzero eigenvalue");
  }
  const double mu = std::sqrt(top.value);
  const auto v = as_vector(top.vector);
  const VectorXd hv = h.entries() * v;

  ComplexEigenpair pair;
  pair.mu = mu;
  const VectorXd im = -hv / mu;
  const double norm = std::sqrt(v.squaredNorm() + im.squaredNorm());
  pair.u_re.resize(h.size());
  pair.u_im.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    pair.u_re[i] = v(static_cast<Index>(i)) / norm;
    pair.u_im[i] = im(static_cast<Index>(i)) / norm;
  }
  return pair;
}

SelbergReport check_selberg_identity(const SkewHilbertMatrix& h, const ComplexEigenpair& pair) {
  const std::size_t n = h.size();
  if (pair.u_re.size() != n || pair.u_im.size() != n) {
    throw Error(ErrorKind::LengthMismatch, "eigenpair and matrix differ in size");
  }
  if (pair.residual(h) > 1e-9 * std::abs(pair.mu)) {
    throw Error(ErrorKind::InvalidArgument, "pair is not an eigenpair of h");
  }
  const auto lambda = h.source().active_nodes();
  const auto c = h.weights();
  const double mu2 = pair.mu * pair.mu;

  SelbergReport report;
  report.lhs.resize(n);
  report.rhs.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double abs_m = pair.u_re[m] * pair.u_re[m] + pair.u_im[m] * pair.u_im[m];
    double first = 0.0;
    double second = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == m) continue;
      const double d = lambda[m] - lambda[k];
      const double d2 = d * d;
      const double abs_k = pair.u_re[k] * pair.u_re[k] + pair.u_im[k] * pair.u_im[k];
      const double re_cross = pair.u_re[m] * pair.u_re[k] + pair.u_im[m] * pair.u_im[k];
      first += c[m] * c[m] * c[k] * c[k] * abs_k / d2;
      second += c[m] * c[m] * c[m] * c[k] * re_cross / d2;
    }
    report.lhs[m] = mu2 * abs_m;
    report.rhs[m] = first + 2.0 * second;
    report.max_abs_residual = std::max(report.max_abs_residual, std::abs(report.lhs[m] - report.rhs[m]));
  }
  report.max_rel_residual = mu2 > 0.0 ? report.max_abs_residual / mu2 : report.max_abs_residual;
  return report;
}

double two_forms_bound(double c3) {
  if (!(c3 >= 0.0)) throw Error(ErrorKind::InvalidArgument, "c3 must be nonnegative");
  return std::sqrt(kPi * kPi / 3.0 + 2.0 * c3);
}

PreissmannChain preissmann_chain() {
  PreissmannChain chain;
  chain.s_coeff = std::pow(kPi, 4) / 45.0;
  chain.t_coeff = 2.0 * kPi * kPi / 3.0;
  // Positive root of x² − t x − s = 0, which simplifies to (π²/3)(1 + √(6/5)).
  chain.c3_upper = 0.5 * (chain.t_coeff + std::sqrt(chain.t_coeff * chain.t_coeff + 4.0 * chain.s_coeff));
  chain.c1_upper = two_forms_bound(chain.c3_upper);
  return chain;
}

NumericalRadiusReport numerical_radius_check(const SkewHilbertMatrix& h, std::span<const double> z_re,
                                             std::span<const double> z_im, std::optional<double> radius) {
  const std::size_t n = h.size();
  if (z_re.size() != n || z_im.size() != n) {
    throw Error(ErrorKind::LengthMismatch, "z must have length N");
  }
  const double rho = radius ? *radius : spectral_radius(h);
  const auto lambda = h.source().active_nodes();
  const auto c = h.weights();

  std::complex<double> form{0.0, 0.0};
  std::complex<double> bare{0.0, 0.0};
  double norm2 = 0.0;
  double weighted_norm2 = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const std::complex<double> zm{z_re[m], z_im[m]};
    std::complex<double> row{0.0, 0.0};
    std::complex<double> bare_row{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      if (k == m) continue;
      const std::complex<double> zk_conj{z_re[k], -z_im[k]};
      const double inv = 1.0 / (lambda[m] - lambda[k]);
      row += c[m] * c[k] * inv * zk_conj;
      bare_row += inv * zk_conj;
    }
    form += zm * row;
    bare += zm * bare_row;
    norm2 += std::norm(zm);
    weighted_norm2 += std::norm(zm) / (c[m] * c[m]);
  }

  NumericalRadiusReport report;
  report.lhs = std::abs(form);
  report.rhs = rho * norm2;
  report.weighted_lhs = std::abs(bare);
  report.weighted_rhs = rho * weighted_norm2;
  const double slack = 1e-9 * std::max(1.0, report.rhs);
  const double weighted_slack = 1e-9 * std::max(1.0, report.weighted_rhs);
  report.holds = report.lhs <= report.rhs + slack &&
                 report.weighted_lhs <= report.weighted_rhs + weighted_slack;
  return report;
}

ChainTerms chain_terms(const GapSequence& seq, const ComplexEigenpair& pair) {
  const std::size_t n = seq.size();
  if (pair.u_re.size() != n) throw Error(ErrorKind::LengthMismatch, "eigenpair and sequence differ");
  const auto lambda = seq.active_nodes();
  const auto delta = seq.deltas();
  std::vector<double> modulus(n);
  for (std::size_t i = 0; i < n; ++i) modulus[i] = std::hypot(pair.u_re[i], pair.u_im[i]);

  ChainTerms out;
  out.mu_squared = pair.mu * pair.mu;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == m) continue;
      const double d = lambda[m] - lambda[k];
      const double d2 = d * d;
      out.s += delta[m] * delta[k] * modulus[k] * modulus[k] / d2;
      out.t += std::pow(delta[m], 1.5) * std::sqrt(delta[k]) * modulus[m] * modulus[k] / d2;
    }
  }
  return out;
}

}  // namespace hcl
