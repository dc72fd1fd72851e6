#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hcl/gap_sequence.hpp"
#include "hcl/spacing.hpp"
#include "test_support.hpp"

using namespace hcl;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("zeta") {
  CHECK(zeta(2.0) == doctest::Approx(kPi * kPi / 6).epsilon(1e-13));
  CHECK(zeta(4.0) == doctest::Approx(std::pow(kPi, 4) / 90).epsilon(1e-13));
  CHECK_ERROR_KIND(zeta(1.0), ErrorKind::SigmaOutOfRange);
  CHECK_ERROR_KIND(zeta(0.5), ErrorKind::SigmaOutOfRange);
  double prev = zeta(1.1);
  for (double s = 1.2; s < 40; s += 0.7) {
    const double z = zeta(s);
    CHECK(z < prev);
    prev = z;
  }
  CHECK(zeta(60.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("f_n_functional") {
  const auto sq = ConvexWeightFunction::power(2.0);
  const std::vector<double> ones{1, 1, 1, 1};
  CHECK(f_n_functional(ones, sq, 3) == doctest::Approx(1 + 0.25 + 1.0 / 9).epsilon(1e-15));
  const std::vector<double> x{2, 1};
  CHECK(f_n_functional(x, sq, 1) == doctest::Approx(0.25));
  CHECK_ERROR_KIND(f_n_functional(x, sq, 2), ErrorKind::IndexOutOfRange);
  CHECK_ERROR_KIND(f_n_functional(x, sq, 0), ErrorKind::IndexOutOfRange);
}

TEST_CASE("equidistance") {
  const auto sq = ConvexWeightFunction::power(2.0);
  const std::vector<double> ones{1, 1, 1};
  const auto r = check_equidistance(ones, sq, 3);
  CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-15));
  CHECK(r.holds);

  const std::vector<double> halves{1.5, 1.5};
  const auto h = check_equidistance(halves, sq, 2);
  CHECK(h.holds);
  CHECK(h.lhs == doctest::Approx(1.5 / 2.25 + 1.5 / 9));
  CHECK(h.rhs == doctest::Approx(1 + 0.25 + 1.0 / 9));
}

TEST_CASE("smoothing monovariant") {
  const auto sq = ConvexWeightFunction::power(2.0);
  const std::vector<double> a{2, 1, 1};
  const auto r = check_smoothing_monovariant(a, 2, 1.0, sq, 2);
  CHECK(r.holds);
  const std::vector<double> b{2, 2, 1};
  CHECK(r.rhs == doctest::Approx(f_n_functional(b, sq, 2)));
  CHECK_ERROR_KIND(check_smoothing_monovariant(a, 2, 0.0, sq, 2), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(check_smoothing_monovariant(a, 2, 1.5, sq, 2), ErrorKind::EpsTooLarge);
  CHECK_ERROR_KIND(check_smoothing_monovariant(a, 3, 0.5, sq, 2), ErrorKind::NotDescendingAtNu);
}

TEST_CASE("F_n upper bound is sharp for unit gaps") {
  const auto sq = ConvexWeightFunction::power(2.0);
  std::vector<double> ones(2001, 1.0);
  const auto r = check_fn_upper(ones, sq, 2000);
  CHECK(r.holds);
  CHECK(r.rhs - r.lhs < 1e-3);
}

TEST_CASE("spacing sums on unit spacing") {
  const auto big = GapSequence::uniform(2001, 1.0);
  CHECK(spacing_sum(big, 1001, 4.0, 1000) ==
        doctest::Approx(std::pow(kPi, 4) / 45).epsilon(1e-9));
  CHECK(std::abs(spacing_sum(big, 1001, 4.0, 1000) - std::pow(kPi, 4) / 45) < 1e-9);
  CHECK_ERROR_KIND(spacing_sum(big, 0, 2.0, 10), ErrorKind::IndexOutOfRange);

  const auto r = spacing_check(big, 1001, 2.0, 1000);
  CHECK(r.holds);
  CHECK(r.rhs == doctest::Approx(kPi * kPi / 3));
  CHECK(r.rhs - r.lhs <= r.tail_bound * (1 + 1e-9));
}

TEST_CASE("pair spacing") {
  const auto s = GapSequence::uniform(400, 1.0);
  const auto r = pair_spacing_sum(s, 200, 201, 400);
  CHECK(r.rhs == doctest::Approx(2 * kPi * kPi / 3 - 6).epsilon(1e-13));
  CHECK(r.lhs < r.rhs);
  CHECK(r.holds);
  CHECK_ERROR_KIND(pair_spacing_sum(s, 3, 3, 10), ErrorKind::SameIndex);

  // Both sides are homogeneous of degree −3 in the spacing.
  for (double sp : {0.1, 1.0, 10.0}) {
    const auto q = pair_spacing_sum(GapSequence::uniform(40, sp), 20, 23, 40);
    const auto base = pair_spacing_sum(GapSequence::uniform(40, 1.0), 20, 23, 40);
    CHECK(q.holds);
    CHECK(q.lhs == doctest::Approx(base.lhs / (sp * sp * sp)).epsilon(1e-12));
    CHECK(q.rhs == doctest::Approx(base.rhs / (sp * sp * sp)).epsilon(1e-12));
  }
}

TEST_CASE("shan split reproduces the spacing sum") {
  const auto s = GapSequence::random(30, 0.2, 5);
  for (double sigma : {1.5, 2.0, 3.0}) {
    const auto f = ConvexWeightFunction::power(sigma);
    for (std::size_t ell : {1, 7, 30}) {
      const auto split = shan_split(s, ell, f, sigma);
      CHECK(split.right + split.left == doctest::Approx(split.scaled_spacing_sum).epsilon(1e-10));
      CHECK(split.right <= zeta(sigma));
      CHECK(split.left <= zeta(sigma));
      CHECK(split.right_gaps.size() == 31 - ell);
      CHECK(split.left_gaps.size() == ell);
    }
  }
}

TEST_CASE("spot_check flags a non-convex weight") {
  CHECK(spot_check(ConvexWeightFunction::power(2.0), 1).ok());
  const ConvexWeightFunction wave{[](double x) { return 2.0 + std::sin(x / 1e5); }, std::nullopt, "wave"};
  const auto d = spot_check(wave, 1, 5000);
  CHECK(d.samples == 5000);
  CHECK_FALSE(d.ok());
}
