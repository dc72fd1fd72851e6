#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace hcl {

/// One verdict of a sweep, serialized as a JSON line
/// {"lemma", "seed", "lhs", "rhs", "holds", "tail_bound"}.
struct SweepRecord {
  std::string lemma;
  std::uint64_t seed = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double tail_bound = 0.0;

  nlohmann::ordered_json to_json() const;
};

struct SuiteOptions {
  std::optional<std::size_t> trials;  // per-check default when unset
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_n;   // per-suite default when unset
  std::optional<double> tol;          // overrides every per-check slack
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all"). Records are ordered by check, then trial.
/// Throws UsageError for an unknown name.
std::vector<SweepRecord> run_suite(std::string_view name, const SuiteOptions& options);

std::vector<SweepRecord> selberg_suite(const SuiteOptions& options);
std::vector<SweepRecord> spacing_suite(const SuiteOptions& options);
std::vector<SweepRecord> pair_spacing_suite(const SuiteOptions& options);
std::vector<SweepRecord> radius_suite(const SuiteOptions& options);
std::vector<SweepRecord> chain_suite(const SuiteOptions& options);
std::vector<SweepRecord> alpha_properties_suite(const SuiteOptions& options);
std::vector<SweepRecord> trig_suite(const SuiteOptions& options);

bool all_hold(const std::vector<SweepRecord>& records);

}  // namespace hcl
