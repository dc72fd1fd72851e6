#include "hcl/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hcl/error.hpp"
#include "hcl/parallel.hpp"
#include "hcl/quadratic_forms.hpp"
#include "hcl/summation.hpp"

namespace hcl {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinSeparation = 1e-9;

// sin²(πy), with y reduced to [−1/2, 1/2] before scaling by π.
double sin2_pi(double y) {
  const double s = std::sin(kPi * (y - std::nearbyint(y)));
  return s * s;
}

double cot_pi(double y) {
  const double r = y - std::nearbyint(y);
  if (std::abs(std::sin(kPi * r)) < 1e-12) {
    throw Error(ErrorKind::CotangentPole, "cot(pi*y) at an integer y = " + std::to_string(y));
  }
  return std::cos(kPi * r) / std::sin(kPi * r);
}

double require_b(std::size_t k, double a) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "K must be >= 1");
  const double b = 1.0 - static_cast<double>(k + 1) * a;
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorKind::AOutOfRange, "need 0 < A < 1/(K+1); K = " + std::to_string(k) +
                                            ", A = " + std::to_string(a));
  }
  return b;
}

}  // namespace

double torus_distance(double x) { return std::abs(x - std::nearbyint(x)); }

TrigConfig::TrigConfig(std::vector<double> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) throw Error(ErrorKind::InvalidArgument, "TrigConfig needs at least one point");
  if (points_.size() != weights_.size()) {
    throw Error(ErrorKind::LengthMismatch, "points and weights differ in length");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] >= 0.0) || !std::isfinite(weights_[i]) || !std::isfinite(points_[i])) {
      throw Error(ErrorKind::InvalidArgument, "entry " + std::to_string(i + 1) + " is invalid");
    }
  }
  const std::size_t m = points_.size();
  gaps_.assign(m, m == 1 ? 1.0 : std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = torus_distance(points_[j] - points_[i]);
      if (d < kMinSeparation) {
        throw Error(ErrorKind::SeparationTooSmall, "points " + std::to_string(i + 1) + " and " +
                                                       std::to_string(j + 1) + " coincide mod 1");
      }
      gaps_[i] = std::min(gaps_[i], d);
      gaps_[j] = std::min(gaps_[j], d);
    }
  }
}

double trig_form_value(const TrigConfig& cfg) {
  const std::size_t m = cfg.size();
  const auto x = cfg.points();
  const auto d = cfg.gaps();
  const auto tau = cfg.weights();
  std::vector<double> left(m);
  std::vector<double> right(m);
  std::vector<double> diagonal(m);
  for (std::size_t i = 0; i < m; ++i) {
    left[i] = std::pow(d[i], 1.5) * tau[i];
    right[i] = std::sqrt(d[i]) * tau[i];
    diagonal[i] = d[i] * d[i] * tau[i] * tau[i] / 3.0;
  }
  std::vector<double> row_sums(m + 1);
  std::vector<double> terms;
  terms.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    terms.clear();
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      terms.push_back(left[i] * right[j] / sin2_pi(x[i] - x[j]));
    }
    row_sums[i] = pairwise_sum(terms);
  }
  row_sums[m] = pairwise_sum(diagonal);
  return pairwise_sum(row_sums);
}

PeriodizedLine periodize(const TrigConfig& cfg, std::size_t k_periods) {
  if (k_periods < 2) throw Error(ErrorKind::InvalidArgument, "k_periods must be >= 2");
  const auto x = cfg.points();
  const std::size_t m = cfg.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (!(x[i] < x[i + 1])) throw Error(ErrorKind::InvalidArgument, "points must be sorted");
  }
  if (!(x[m - 1] < x[0] + 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "points must fit inside one period");
  }
  std::vector<double> nodes;
  std::vector<double> t;
  nodes.reserve(k_periods * m + 2);
  t.reserve(k_periods * m);
  nodes.push_back(x[m - 1] - 1.0);
  for (std::size_t k = 0; k < k_periods; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      nodes.push_back(static_cast<double>(k) + x[i]);
      t.push_back(cfg.weights()[i]);
    }
  }
  nodes.push_back(static_cast<double>(k_periods) + x[0]);
  auto seq = GapSequence::from_nodes(std::move(nodes));
  auto weights = WeightVector::for_sequence(seq, std::move(t));
  return {std::move(seq), std::move(weights)};
}

EquivalenceReport periodized_equivalence_check(const TrigConfig& cfg, std::size_t k_periods) {
  const auto line = periodize(cfg, k_periods);
  EquivalenceReport report;
  report.line_side =
      q_alpha(line.seq, line.weights, 0.5) / (kPi * kPi * static_cast<double>(k_periods));
  report.trig_side = trig_form_value(cfg);
  report.gap = report.line_side - report.trig_side;
  return report;
}

double l_sum(double b, std::size_t l) {
  if (!(b > 0.0 && b < 1.0)) throw Error(ErrorKind::InvalidArgument, "l_sum needs 0 < B < 1");
  if (l < 1) throw Error(ErrorKind::InvalidArgument, "l_sum needs L >= 1");
  const double ll = static_cast<double>(l);
  std::vector<double> terms(l);
  for (std::size_t i = 1; i <= l; ++i) {
    terms[i - 1] = (ll + 1.0 - static_cast<double>(i)) / sin2_pi(static_cast<double>(i) * b / ll);
  }
  return pairwise_sum(terms);
}

Kappas kappas(std::size_t k, double a) {
  const double b = require_b(k, a);
  const double kk = static_cast<double>(k);
  double sine_sum = 0.0;
  double cot_sum = 0.0;
  for (std::size_t j = 1; j <= k; ++j) {
    const double y = static_cast<double>(j) * a;
    cot_sum += cot_pi(y);
    if (j < k) sine_sum += (kk - static_cast<double>(j)) / sin2_pi(y);
  }
  Kappas out;
  out.kappa0 = a * a / 3.0 + 2.0 * a * a / kk * sine_sum;
  out.kappa1 = 2.0 / kPi * std::sqrt(a * a * a / (b * kk)) * cot_sum;
  return out;
}

double g_of_u(double kappa0, double kappa1, double u) {
  if (!(u >= 0.0)) throw Error(ErrorKind::InvalidArgument, "g(u) needs u >= 0");
  return (kappa0 + kappa1 * u + u * u / 3.0) / (1.0 + u * u);
}

ConstructionResult big_g(std::size_t k, double a) {
  const double b = require_b(k, a);
  const auto kap = kappas(k, a);
  ConstructionResult r;
  r.k = k;
  r.a = a;
  r.b = b;
  r.kappa0 = kap.kappa0;
  r.kappa1 = kap.kappa1;
  const double third = 1.0 / 3.0;
  if (std::abs(kap.kappa1) < 1e-14) {
    // g runs monotonically from κ₀ at u = 0 to 1/3 as u → ∞.
    r.g_value = std::max(kap.kappa0, third);
    r.u_star = kap.kappa0 >= third ? 0.0 : std::numeric_limits<double>::infinity();
    return r;
  }
  const double root = std::hypot(third - kap.kappa0, kap.kappa1);
  r.u_star = (third - kap.kappa0 + root) / kap.kappa1;
  r.g_value = 0.5 * (third + kap.kappa0 + root);
  return r;
}

ScanTable scan(std::size_t k_min, std::size_t k_max, std::size_t a_steps) {
  if (k_min < 1 || k_max < k_min) throw Error(ErrorKind::InvalidArgument, "need 1 <= k_min <= k_max");
  if (a_steps < 2) throw Error(ErrorKind::InvalidArgument, "need a_steps >= 2");
  const std::size_t per_k = a_steps;
  const std::size_t total = (k_max - k_min + 1) * per_k;
  ScanTable table;
  table.rows = parallel_map<ScanRow>(total, [&](std::size_t idx) {
    const std::size_t k = k_min + idx / per_k;
    const std::size_t j = idx % per_k + 1;
    const double x = static_cast<double>(j) / static_cast<double>(a_steps + 1);
    return ScanRow{x, big_g(k, x / static_cast<double>(k + 1))};
  });
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (table.rows[i].result.g_value > table.rows[table.argmax].result.g_value) table.argmax = i;
  }
  return table;
}

CotLimitReport cot_limit_check(std::size_t k, double a, std::size_t l) {
  const double b = require_b(k, a);
  if (l < 10) throw Error(ErrorKind::InvalidArgument, "cot_limit_check needs L >= 10");
  double cot_sum = 0.0;
  for (std::size_t j = 1; j <= k; ++j) cot_sum += cot_pi(static_cast<double>(j) * a);

  auto average = [&](std::size_t len) {
    const double ll = static_cast<double>(len);
    std::vector<double> terms;
    terms.reserve(k * (len + 1));
    for (std::size_t j = 1; j <= k; ++j) {
      for (std::size_t i = 0; i <= len; ++i) {
        terms.push_back(1.0 / sin2_pi(static_cast<double>(j) * a + static_cast<double>(i) * b / ll));
      }
    }
    return pairwise_sum(terms) / ll;
  };

  CotLimitReport report;
  report.closed_form = 2.0 / (kPi * b) * cot_sum;
  report.average_l = average(l);
  report.average_2l = average(2 * l);
  report.gap_l = std::abs(report.average_l - report.closed_form) / std::abs(report.closed_form);
  report.gap_2l = std::abs(report.average_2l - report.closed_form) / std::abs(report.closed_form);
  report.shrinking = report.gap_2l < report.gap_l;
  return report;
}

TrigConfig construction_config(std::size_t k, double a, std::size_t l, double u) {
  const double b = require_b(k, a);
  if (l < 1 || static_cast<double>(l) < b / a) {
    throw Error(ErrorKind::InvalidArgument, "construction needs L >= B/A");
  }
  if (!(u >= 0.0)) throw Error(ErrorKind::InvalidArgument, "construction needs u >= 0");
  const double ll = static_cast<double>(l);
  std::vector<double> points;
  std::vector<double> weights;
  points.reserve(k + l + 1);
  weights.reserve(k + l + 1);
  for (std::size_t j = 1; j <= k; ++j) {
    points.push_back(static_cast<double>(j) * a);
    weights.push_back(1.0 / std::sqrt(static_cast<double>(k)));
  }
  const double start = static_cast<double>(k + 1) * a;
  for (std::size_t i = 0; i <= l; ++i) {
    points.push_back(start + static_cast<double>(i) * b / ll);
    weights.push_back(u / std::sqrt(ll + 1.0));
  }
  return TrigConfig(std::move(points), std::move(weights));
}

double construction_left_side(std::size_t k, double a, std::size_t l, double u) {
  const double b = require_b(k, a);
  if (!(u >= 0.0)) throw Error(ErrorKind::InvalidArgument, "construction needs u >= 0");
  const double kk = static_cast<double>(k);
  const double ll = static_cast<double>(l);

  double k_block = 0.0;
  for (std::size_t j = 1; j < k; ++j) {
    k_block += (kk - static_cast<double>(j)) / sin2_pi(static_cast<double>(j) * a);
  }
  std::vector<double> cross;
  cross.reserve(k * (l + 1));
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t i = 0; i <= l; ++i) {
      cross.push_back(1.0 / sin2_pi(static_cast<double>(j) * a + static_cast<double>(i) * b / ll));
    }
  }
  const double u2 = u * u;
  return a * a / 3.0 + u2 * b * b / (3.0 * ll * ll) + 2.0 * a * a / kk * k_block +
         2.0 * u2 * b * b / (ll * ll * (ll + 1.0)) * l_sum(b, l) +
         u * std::sqrt(a * b / (kk * ll * (ll + 1.0))) * (a + b / ll) * pairwise_sum(cross);
}

}  // namespace hcl
