#include <sstream>

#include <doctest.h>

#include "hcl/gap_sequence.hpp"
#include "test_support.hpp"

using hcl::ErrorKind;
using hcl::GapSequence;
using hcl::WeightVector;

TEST_CASE("from_nodes computes local gaps") {
  const auto a = GapSequence::from_nodes({-1, 0, 1, 2});
  CHECK(a.size() == 2);
  CHECK(a.delta(1) == 1.0);
  CHECK(a.delta(2) == 1.0);

  const auto b = GapSequence::from_nodes({0, 1, 3, 4});
  CHECK(b.delta(1) == 1.0);
  CHECK(b.delta(2) == 1.0);
  CHECK(b.node(0) == 0.0);
  CHECK(b.node(3) == 4.0);
}

TEST_CASE("from_nodes rejects bad input") {
  CHECK_ERROR_KIND(GapSequence::from_nodes({0, 1, 1}), ErrorKind::NotIncreasing);
  CHECK_ERROR_KIND(GapSequence::from_nodes({0, 2, 1, 3}), ErrorKind::NotIncreasing);
  CHECK_ERROR_KIND(GapSequence::from_nodes({0, 1}), ErrorKind::TooShort);
  CHECK_ERROR_KIND(GapSequence::from_nodes({0, 1, INFINITY}), ErrorKind::InvalidArgument);
}

TEST_CASE("index access is bounds checked") {
  const auto s = GapSequence::uniform(3, 1.0);
  CHECK_ERROR_KIND(s.delta(0), ErrorKind::IndexOutOfRange);
  CHECK_ERROR_KIND(s.delta(4), ErrorKind::IndexOutOfRange);
  CHECK_ERROR_KIND(s.node(5), ErrorKind::IndexOutOfRange);
}

TEST_CASE("uniform") {
  const auto s = GapSequence::uniform(3, 1.0);
  CHECK(std::vector<double>(s.nodes().begin(), s.nodes().end()) == std::vector<double>{0, 1, 2, 3, 4});
  for (double d : s.deltas()) CHECK(d == 1.0);

  const auto h = GapSequence::uniform(1, 0.5);
  CHECK(std::vector<double>(h.nodes().begin(), h.nodes().end()) == std::vector<double>{0, 0.5, 1.0});
  CHECK(h.delta(1) == 0.5);

  const auto w = GapSequence::uniform(4, 2.0);
  for (double d : w.deltas()) CHECK(d == 2.0);
}

TEST_CASE("cluster") {
  const auto two = GapSequence::cluster(2);
  CHECK(std::vector<double>(two.nodes().begin(), two.nodes().end()) == std::vector<double>{0, 1, 2, 2.5});
  CHECK(two.delta(1) == 1.0);
  CHECK(two.delta(2) == 0.5);

  const auto four = GapSequence::cluster(4);
  CHECK(four.delta(1) == 1.0);
  for (std::size_t k = 2; k <= 4; ++k) CHECK(four.delta(k) == doctest::Approx(0.25).epsilon(1e-15));

  CHECK(GapSequence::cluster(10).delta(2) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("random is seeded and respects the gap range") {
  const auto a = GapSequence::random(5, 1.0, 42);
  const auto b = GapSequence::random(5, 1.0, 42);
  CHECK(std::vector<double>(a.nodes().begin(), a.nodes().end()) ==
        std::vector<double>(b.nodes().begin(), b.nodes().end()));
  CHECK(GapSequence::random(5, 1.0, 43).node(3) != a.node(3));

  CHECK(GapSequence::random(1, 0.1, 0).size() == 1);

  const auto tiny = GapSequence::random(100, 1e-6, 7);
  for (std::size_t k = 1; k < tiny.nodes().size(); ++k) {
    const double g = tiny.nodes()[k] - tiny.nodes()[k - 1];
    CHECK(g >= 1e-6);
    CHECK(g <= 1e-5 * (1 + 1e-12));
  }
}

TEST_CASE("json round trip and csv import") {
  const auto s = GapSequence::random(6, 0.3, 9);
  const auto j = s.to_json();
  CHECK(j["n"] == 6);
  CHECK(j["nodes"].size() == 8);
  const auto back = GapSequence::from_json(j);
  CHECK(std::vector<double>(back.nodes().begin(), back.nodes().end()) ==
        std::vector<double>(s.nodes().begin(), s.nodes().end()));

  std::istringstream csv("# nodes\n0\n\n0.5\n2\n2.25\n");
  const auto c = GapSequence::from_csv(csv);
  CHECK(c.size() == 2);
  CHECK(c.delta(1) == 0.5);
  CHECK(c.delta(2) == 0.25);
}

TEST_CASE("weight vectors") {
  CHECK_ERROR_KIND(WeightVector({1.0, -0.5}), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(WeightVector({NAN}), ErrorKind::InvalidArgument);
  const auto s = GapSequence::uniform(3, 1.0);
  CHECK_ERROR_KIND(WeightVector::for_sequence(s, {1, 2}), ErrorKind::LengthMismatch);
  CHECK(WeightVector::for_sequence(s, {1, 0, 2})[2] == 2.0);
}
