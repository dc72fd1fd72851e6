#include "hcl/gap_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "hcl/error.hpp"
#include "hcl/rng.hpp"

namespace hcl {

GapSequence::GapSequence(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  const std::size_t n = nodes_.size() - 2;
  deltas_.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    deltas_[k - 1] = std::min(nodes_[k] - nodes_[k - 1], nodes_[k + 1] - nodes_[k]);
  }
  min_gap_ = nodes_[1] - nodes_[0];
  max_gap_ = min_gap_;
  for (std::size_t k = 1; k + 1 < nodes_.size(); ++k) {
    const double g = nodes_[k + 1] - nodes_[k];
    min_gap_ = std::min(min_gap_, g);
    max_gap_ = std::max(max_gap_, g);
  }
}

GapSequence GapSequence::from_nodes(std::vector<double> nodes) {
  if (nodes.size() < 3) {
    throw Error(ErrorKind::TooShort, "need at least 3 nodes (two ghosts and one active), got " +
                                         std::to_string(nodes.size()));
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!std::isfinite(nodes[k])) {
      throw Error(ErrorKind::InvalidArgument, "node " + std::to_string(k) + " is not finite");
    }
  }
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    // The gap itself must be positive after rounding, not just the comparison.
    if (!(nodes[k + 1] - nodes[k] > 0.0)) {
      throw Error(ErrorKind::NotIncreasing, "node " + std::to_string(k + 1) +
                                                " does not exceed its predecessor");
    }
  }
  return GapSequence(std::move(nodes));
}

GapSequence GapSequence::uniform(std::size_t n, double spacing) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "uniform: n must be >= 1");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw Error(ErrorKind::InvalidArgument, "uniform: spacing must be positive");
  }
  std::vector<double> nodes(n + 2);
  for (std::size_t k = 0; k < nodes.size(); ++k) nodes[k] = static_cast<double>(k) * spacing;
  return from_nodes(std::move(nodes));
}

GapSequence GapSequence::cluster(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "cluster: n must be >= 2");
  std::vector<double> nodes(n + 2);
  nodes[0] = 0.0;
  nodes[1] = 1.0;
  for (std::size_t ell = 0; ell < n; ++ell) {
    nodes[2 + ell] = 2.0 + static_cast<double>(ell) / static_cast<double>(n);
  }
  return from_nodes(std::move(nodes));
}

GapSequence GapSequence::random(std::size_t n, double min_gap, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "random: n must be >= 1");
  if (!(min_gap > 0.0) || !std::isfinite(min_gap)) {
    throw Error(ErrorKind::InvalidArgument, "random: min_gap must be positive");
  }
  Rng rng(seed);
  std::vector<double> nodes(n + 2);
  nodes[0] = 0.0;
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    nodes[k] = nodes[k - 1] + rng.uniform(min_gap, 10.0 * min_gap);
  }
  return from_nodes(std::move(nodes));
}

GapSequence GapSequence::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.at("nodes").is_array()) {
    throw Error(ErrorKind::InvalidArgument, "expected an object with a \"nodes\" array");
  }
  auto seq = from_nodes(j.at("nodes").get<std::vector<double>>());
  if (j.contains("n") && j.at("n").get<std::size_t>() != seq.size()) {
    throw Error(ErrorKind::LengthMismatch, "\"n\" disagrees with the node count");
  }
  return seq;
}

GapSequence GapSequence::from_csv(std::istream& in) {
  std::vector<double> nodes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream cell(line.substr(first));
    double v = 0.0;
    cell >> v;
    std::string rest;
    if (cell.fail() || (cell >> rest)) {
      throw Error(ErrorKind::InvalidArgument, "csv line " + std::to_string(line_no) +
                                                  " is not a single number");
    }
    nodes.push_back(v);
  }
  return from_nodes(std::move(nodes));
}

double GapSequence::node(std::size_t k) const {
  if (k >= nodes_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "node index " + std::to_string(k));
  }
  return nodes_[k];
}

double GapSequence::delta(std::size_t k) const {
  if (k < 1 || k > size()) {
    throw Error(ErrorKind::IndexOutOfRange, "delta index " + std::to_string(k));
  }
  return deltas_[k - 1];
}

nlohmann::json GapSequence::to_json() const {
  return nlohmann::json{{"nodes", nodes_}, {"n", size()}};
}

GapSequence GapSequence::translated(double c) const {
  std::vector<double> out(nodes_);
  for (double& x : out) x += c;
  return from_nodes(std::move(out));
}

GapSequence GapSequence::scaled(double s) const {
  if (!(s > 0.0)) throw Error(ErrorKind::InvalidArgument, "scale factor must be positive");
  std::vector<double> out(nodes_);
  for (double& x : out) x *= s;
  return from_nodes(std::move(out));
}

WeightVector::WeightVector(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0) || !std::isfinite(values_[i])) {
      throw Error(ErrorKind::InvalidArgument,
                  "weight " + std::to_string(i + 1) + " must be finite and nonnegative");
    }
  }
}

WeightVector WeightVector::for_sequence(const GapSequence& seq, std::vector<double> values) {
  if (values.size() != seq.size()) {
    throw Error(ErrorKind::LengthMismatch, "weights have length " + std::to_string(values.size()) +
                                               ", sequence has N = " + std::to_string(seq.size()));
  }
  return WeightVector(std::move(values));
}

}  // namespace hcl
