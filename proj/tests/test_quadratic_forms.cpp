#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hcl/quadratic_forms.hpp"
#include "hcl/rng.hpp"
#include "hcl/top_eigen.hpp"
#include "oracles/jacobi.hpp"
#include "test_support.hpp"

using namespace hcl;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("alpha matrix structure") {
  const auto s = GapSequence::random(7, 0.2, 3);
  const AlphaFormMatrix m(s, 0.3);
  const AlphaFormMatrix mt(s, 1.7);
  for (Eigen::Index i = 0; i < 7; ++i) {
    CHECK(m.entries()(i, i) == 0.0);
    for (Eigen::Index j = 0; j < 7; ++j) {
      CHECK(m.entries()(i, j) >= 0.0);
      CHECK(m.entries()(i, j) == doctest::Approx(mt.entries()(j, i)).epsilon(1e-14));
    }
  }
  CHECK_ERROR_KIND(AlphaFormMatrix(s, -0.1), ErrorKind::AlphaOutOfRange);
  CHECK_ERROR_KIND(AlphaFormMatrix(s, 2.1), ErrorKind::AlphaOutOfRange);
}

TEST_CASE("q_alpha") {
  const auto two = GapSequence::uniform(2, 1.0);
  for (double a : {0.0, 0.5, 1.0, 2.0}) CHECK(q_alpha(two, WeightVector({1, 1}), a) == doctest::Approx(2.0));
  const auto s = GapSequence::random(5, 0.5, 1);
  CHECK(q_alpha(s, WeightVector(std::vector<double>(5, 0.0)), 0.7) == 0.0);
  CHECK_ERROR_KIND(q_alpha(s, WeightVector({1, 1}), 1.0), ErrorKind::LengthMismatch);
  CHECK_ERROR_KIND(q_alpha(s, WeightVector(std::vector<double>(5, 1.0)), 3.0), ErrorKind::AlphaOutOfRange);

  const std::size_t n = 100;
  const WeightVector t(std::vector<double>(n, 1.0 / std::sqrt(100.0)));
  double expected = 0.0;
  for (std::size_t k = 1; k < n; ++k) expected += 2.0 * static_cast<double>(n - k) / (n * static_cast<double>(k * k));
  CHECK(q_alpha(GapSequence::uniform(n, 1.0), t, 1.0) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("top_eigen_nonneg_sym") {
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  const auto r = top_eigen_nonneg_sym(swap);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.vector[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(r.vector[1] == doctest::Approx(std::sqrt(0.5)));

  const auto zero = top_eigen_nonneg_sym(Eigen::MatrixXd::Zero(1, 1));
  CHECK(zero.value == 0.0);
  CHECK(zero.vector[0] == 1.0);

  Eigen::MatrixXd neg(2, 2);
  neg << 0, -1, -1, 0;
  CHECK_ERROR_KIND(top_eigen_nonneg_sym(neg), ErrorKind::NegativeEntry);
  Eigen::MatrixXd skew(2, 2);
  skew << 0, 1, 2, 0;
  CHECK_ERROR_KIND(top_eigen_nonneg_sym(skew), ErrorKind::NotSymmetric);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd m(6, 6);
    oracle::Dense d(6, std::vector<double>(6));
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j <= i; ++j) {
        m(i, j) = m(j, i) = d[i][j] = d[j][i] = rng.uniform01();
      }
    }
    const auto top = top_eigen_nonneg_sym(m);
    CHECK(top.value == doctest::Approx(oracle::jacobi_top(d)).epsilon(1e-9));
    CHECK(top.residual <= 1e-10 * top.value);
    for (double v : top.vector) CHECK(v >= 0.0);
  }
}

TEST_CASE("top eigen is deterministic and honours the budget") {
  const AlphaFormMatrix m(GapSequence::random(40, 0.1, 2), 1.0);
  const Eigen::MatrixXd sym = m.symmetrized();
  const auto a = top_eigen_nonneg_sym(sym);
  const auto b = top_eigen_nonneg_sym(sym);
  CHECK(a.value == b.value);
  CHECK(a.vector == b.vector);

  TopEigenOptions starved;
  starved.max_matvecs = 2;
  starved.krylov_dim = 2;
  CHECK_ERROR_KIND(top_eigen_nonneg_sym(sym, starved), ErrorKind::NoConvergence);
}

TEST_CASE("estimate_constant small cases") {
  CHECK(estimate_constant(0.5, GapSequence::uniform(1, 1.0)).value == 0.0);
  for (double a : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    CHECK(estimate_constant(a, GapSequence::uniform(2, 1.0)).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(estimate_constant(a, GapSequence::uniform(2, 0.37)).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(estimate_constant(a, GapSequence::from_nodes({-5, 0, 2, 9})).value ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  // With an outer gap shorter than the middle one, δ drops below the gap and the value below 1.
  CHECK(estimate_constant(1.0, GapSequence::from_nodes({0, 0.5, 2.5, 3})).value < 1.0);
}

TEST_CASE("estimate_constant brackets and symmetry") {
  const auto uni = estimate_constant(1.0, GapSequence::uniform(200, 1.0));
  CHECK(uni.value > uniform_lower_bound(200));
  CHECK(uni.value < kPi * kPi / 3);
  CHECK(uni.witness.size() == 200);
  double norm = 0.0;
  for (double t : uni.witness.values()) norm += t * t;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q_alpha(uni.config, uni.witness, 1.0) == doctest::Approx(uni.value).epsilon(1e-10));

  const auto s = GapSequence::random(9, 0.1, 77);
  for (double a : {0.0, 0.25, 0.8}) {
    CHECK(estimate_constant(a, s).value == doctest::Approx(estimate_constant(2 - a, s).value).epsilon(1e-12));
  }
}

TEST_CASE("uniform_lower_bound") {
  CHECK(uniform_lower_bound(2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(uniform_lower_bound(10000) < kPi * kPi / 3);
  for (std::size_t n = 2; n < 100000; n *= 2) CHECK(uniform_lower_bound(2 * n) > uniform_lower_bound(n));
  CHECK_ERROR_KIND(uniform_lower_bound(1), ErrorKind::InvalidArgument);
}

TEST_CASE("cluster_lower_bound") {
  CHECK(cluster_lower_bound(0.0, 400) / cluster_lower_bound(0.0, 100) >= 1.8);
  double lo = INFINITY;
  double hi = 0.0;
  for (std::size_t n = 2; n <= 10000; n = n * 3 / 2 + 1) {
    const double v = cluster_lower_bound(0.5, n);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi / lo < 3.0);
  for (std::size_t n : {2, 6, 30}) {
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
      CHECK(estimate_constant(a, GapSequence::cluster(n)).value >= cluster_lower_bound(a, n) - 1e-9);
    }
  }
}

TEST_CASE("search_configuration is seeded and dominates its starts") {
  SearchOptions opts;
  opts.restarts = 3;
  opts.rounds = 20;
  opts.seed = 4;
  const auto a = search_configuration(0.5, 6, opts);
  const auto b = search_configuration(0.5, 6, opts);
  CHECK(a.value == b.value);
  CHECK(a.n == 6);
  CHECK(a.value <= 5.0 + 1e-9);
  CHECK(a.value >= estimate_constant(0.5, a.config).value - 1e-12);
  CHECK(a.value == doctest::Approx(estimate_constant(0.5, a.config).value).epsilon(1e-12));
}

TEST_CASE("constant json") {
  const auto e = estimate_constant(1.0, GapSequence::uniform(3, 1.0));
  const auto j = e.to_json("uniform");
  CHECK(j["config"] == "uniform");
  CHECK(j["n"] == 3);
  CHECK(j["witness"].size() == 3);
  CHECK(j["value"].get<double>() == doctest::Approx(e.value));
}
