#include "hcl/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hcl/error.hpp"
#include "hcl/rng.hpp"

namespace hcl {
namespace {

constexpr std::size_t kZetaTerms = 1000000;

// Neumaier compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

void require_sigma(double sigma) {
  if (!(sigma > 1.0) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::SigmaOutOfRange, "sigma must be > 1, got " + std::to_string(sigma));
  }
}

void require_active(const GapSequence& seq, std::size_t k) {
  if (k < 1 || k > seq.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(k) + " outside 1.." + std::to_string(seq.size()));
  }
}

// Σ_{j>w} j^{−p}, bounded by the integral from w (or by 1 + 1/(p−1) when w = 0).
double power_tail(std::size_t w, double p) {
  if (w == 0) return p / (p - 1.0);
  return std::pow(static_cast<double>(w), 1.0 - p) / (p - 1.0);
}

}  // namespace

double zeta(double sigma) {
  require_sigma(sigma);
  CompensatedSum s;
  // Smallest terms first.
  for (std::size_t k = kZetaTerms - 1; k >= 1; --k) {
    s.add(std::pow(static_cast<double>(k), -sigma));
  }
  const double n = static_cast<double>(kZetaTerms);
  const double n_pow = std::pow(n, -sigma);
  s.add(n * n_pow / (sigma - 1.0));
  s.add(0.5 * n_pow);
  s.add(sigma * n_pow / (12.0 * n));
  return s.value();
}

ConvexWeightFunction ConvexWeightFunction::power(double sigma) {
  require_sigma(sigma);
  return ConvexWeightFunction{[sigma](double x) { return std::pow(x, -sigma); }, zeta(sigma),
                              "x^-" + std::to_string(sigma)};
}

WeightFunctionDiagnostic spot_check(const ConvexWeightFunction& f, std::uint64_t seed,
                                    std::size_t samples) {
  Rng rng(seed);
  WeightFunctionDiagnostic diag;
  diag.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    double x = rng.uniform(1.0, 1e6);
    double y = rng.uniform(1.0, 1e6);
    if (x > y) std::swap(x, y);
    const double theta = rng.uniform01();
    const double fx = f(x);
    const double fy = f(y);
    const double fm = f(theta * x + (1.0 - theta) * y);
    const double slack = 1e-12 * std::max({1.0, std::abs(fx), std::abs(fy)});
    if (fm > theta * fx + (1.0 - theta) * fy + slack) ++diag.convexity_violations;
    if (fx < fy - slack) ++diag.monotonicity_violations;
    if (fx < 0.0 || fy < 0.0) ++diag.negativity_violations;
  }
  return diag;
}

double f_n_functional(std::span<const double> x, const ConvexWeightFunction& f, std::size_t n) {
  if (n < 1 || n + 1 > x.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "F_n needs 1 <= n <= len(x) - 1; n = " +
                                                std::to_string(n) + ", len = " +
                                                std::to_string(x.size()));
  }
  if (!(x[0] >= 1.0)) throw Error(ErrorKind::InvalidArgument, "F_n needs x_1 >= 1");
  for (std::size_t k = 0; k <= n; ++k) {
    if (!(x[k] > 0.0)) throw Error(ErrorKind::InvalidArgument, "F_n needs positive entries");
  }
  double partial = 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    partial += x[k];
    total += std::min(x[k], x[k + 1]) * f(partial);
  }
  return total;
}

InequalityReport check_equidistance(std::span<const double> a, const ConvexWeightFunction& f,
                                    std::size_t n) {
  if (n < 1 || n > a.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "equidistance needs 1 <= n <= len(a)");
  }
  double lambda = 0.0;
  double lhs = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(a[k] >= 1.0)) throw Error(ErrorKind::InvalidArgument, "equidistance needs a_k >= 1");
    lambda += a[k];
    lhs += a[k] * f(lambda);
  }
  const double whole = std::floor(lambda);
  double rhs = 0.0;
  for (double j = 1.0; j <= whole; j += 1.0) rhs += f(j);
  rhs += (lambda - whole) * f(whole + 1.0);
  return {lhs, rhs, lhs <= rhs + 1e-12, 0.0};
}

InequalityReport check_smoothing_monovariant(std::span<const double> a, std::size_t nu, double eps,
                                             const ConvexWeightFunction& f, std::size_t n) {
  if (nu < 2 || nu > a.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "nu must satisfy 2 <= nu <= len(a)");
  }
  const double drop = a[nu - 2] - a[nu - 1];
  if (!(drop > 0.0)) {
    throw Error(ErrorKind::NotDescendingAtNu, "need a_{nu-1} > a_nu at nu = " + std::to_string(nu));
  }
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (eps > drop) {
    throw Error(ErrorKind::EpsTooLarge, "eps exceeds a_{nu-1} - a_nu = " + std::to_string(drop));
  }
  std::vector<double> b(a.begin(), a.end());
  b[nu - 1] += eps;
  const double fa = f_n_functional(a, f, n);
  const double fb = f_n_functional(b, f, n);
  return {fa, fb, fa <= fb + 1e-12, 0.0};
}

InequalityReport check_fn_upper(std::span<const double> a, const ConvexWeightFunction& f,
                                std::size_t n) {
  if (!f.tail_sum) throw Error(ErrorKind::InvalidArgument, "weight function has no tail_sum");
  const double lhs = f_n_functional(a, f, n);
  return {lhs, *f.tail_sum, lhs <= *f.tail_sum + 1e-12, 0.0};
}

double spacing_sum(const GapSequence& seq, std::size_t ell, double sigma, std::size_t window) {
  require_sigma(sigma);
  require_active(seq, ell);
  const std::size_t n = seq.size();
  const std::size_t lo = ell > window ? ell - window : 1;
  const std::size_t hi = std::min(n, ell + std::min(window, n));
  const double center = seq.node(ell);
  const auto nodes = seq.nodes();
  const auto deltas = seq.deltas();
  // Outermost terms first on each side, which are also the smallest.
  double right = 0.0;
  for (std::size_t k = hi; k > ell; --k) {
    right += deltas[k - 1] / std::pow(nodes[k] - center, sigma);
  }
  double left = 0.0;
  for (std::size_t k = std::max<std::size_t>(lo, 1); k < ell; ++k) {
    left += deltas[k - 1] / std::pow(center - nodes[k], sigma);
  }
  return right + left;
}

InequalityReport spacing_check(const GapSequence& seq, std::size_t ell, double sigma,
                               std::size_t window, std::optional<double> zeta_sigma) {
  const double lhs = spacing_sum(seq, ell, sigma, window);
  const double z = zeta_sigma ? *zeta_sigma : zeta(sigma);
  const double rhs = 2.0 * z / std::pow(seq.delta(ell), sigma - 1.0);
  const std::size_t right_kept = std::min(window, seq.size() - ell);
  const std::size_t left_kept = std::min(window, ell - 1);
  const double scale = seq.max_gap() * std::pow(seq.min_gap(), -sigma);
  const double tail = scale * (power_tail(right_kept, sigma) + power_tail(left_kept, sigma));
  return {lhs, rhs, lhs <= rhs + 1e-12 * rhs, tail};
}

InequalityReport pair_spacing_sum(const GapSequence& seq, std::size_t ell, std::size_t m,
                                  std::size_t window) {
  require_active(seq, ell);
  require_active(seq, m);
  if (ell == m) throw Error(ErrorKind::SameIndex, "pair spacing needs distinct indices");
  const std::size_t n = seq.size();
  const std::size_t first = std::min(ell, m);
  const std::size_t last = std::max(ell, m);
  const std::size_t lo = first > window ? first - window : 1;
  const std::size_t hi = std::min(n, last + std::min(window, n));
  const auto nodes = seq.nodes();
  const auto deltas = seq.deltas();
  const double x_l = nodes[ell];
  const double x_m = nodes[m];

  double lhs = 0.0;
  for (std::size_t k = lo; k <= hi; ++k) {
    if (k == ell || k == m) continue;
    const double p = nodes[k] - x_l;
    const double q = nodes[k] - x_m;
    lhs += deltas[k - 1] / (p * p * q * q);
  }

  const double d_l = deltas[ell - 1];
  const double d_m = deltas[m - 1];
  const double gap2 = (x_l - x_m) * (x_l - x_m);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double rhs = pi2 * (d_l + d_m) / (3.0 * d_l * d_m * gap2) - 3.0 * (d_l + d_m) / (gap2 * gap2);

  const std::size_t left_kept = first - lo;
  const std::size_t right_kept = hi - last;
  const double scale = seq.max_gap() * std::pow(seq.min_gap(), -4.0);
  const double tail = scale * (power_tail(left_kept, 4.0) + power_tail(right_kept, 4.0));
  return {lhs, rhs, lhs <= rhs + 1e-12 * std::abs(rhs), tail};
}

ShanSplit shan_split(const GapSequence& seq, std::size_t ell, const ConvexWeightFunction& power_f,
                     double sigma) {
  require_active(seq, ell);
  const std::size_t n = seq.size();
  const auto nodes = seq.nodes();
  const double d = seq.delta(ell);

  ShanSplit split;
  // a_1 … a_{N−ℓ+1}; the last one reaches the right ghost.
  for (std::size_t k = ell + 1; k <= n + 1; ++k) {
    split.right_gaps.push_back((nodes[k] - nodes[k - 1]) / d);
  }
  // b_1 … b_ℓ; the last one reaches the left ghost.
  for (std::size_t k = ell; k >= 1; --k) {
    split.left_gaps.push_back((nodes[k] - nodes[k - 1]) / d);
  }
  const std::size_t right_terms = n - ell;
  const std::size_t left_terms = ell - 1;
  if (right_terms > 0) split.right = f_n_functional(split.right_gaps, power_f, right_terms);
  if (left_terms > 0) split.left = f_n_functional(split.left_gaps, power_f, left_terms);
  split.scaled_spacing_sum = std::pow(d, sigma - 1.0) * spacing_sum(seq, ell, sigma, n);
  return split;
}

}  // namespace hcl
