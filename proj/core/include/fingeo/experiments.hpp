#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fingeo/projective_space.hpp"
#include "fingeo/solvers.hpp"

namespace fingeo {

/// H(n, k, q) with multiplicity t: k is the dimension of the hyperedges.
struct GridInstance {
  int n = 2;
  int k = 1;
  std::uint64_t q = 2;
  std::uint64_t t = 2;
  std::string label() const;
};

struct ExperimentLimits {
  SolveLimits solve;
  SpaceLimits space;
  std::uint64_t kernel_limit = TModPQuery{}.kernel_limit;
  /// Kernel samples drawn when the t (mod p) walk exceeds kernel_limit.
  std::uint64_t tmodp_samples = 20'000;
};

inline constexpr const char* kLimitsEnv = "FINGEO_LIMITS";

/// Applies "key=value,..." overrides (tau_vertices, ucn_vertices, node_limit,
/// max_points, max_subspaces, kernel_limit, tmodp_samples). Throws
/// PreconditionError on unknown keys or bad numbers.
void apply_limit_overrides(ExperimentLimits& limits, const std::string& spec);
/// Defaults overridden by the FINGEO_LIMITS environment variable, if set.
ExperimentLimits limits_from_env();

struct ExperimentConfig {
  std::vector<GridInstance> grid = default_grid();
  ExperimentLimits limits = limits_from_env();
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "fingeo-run";
  unsigned threads = 1;

  static std::vector<GridInstance> default_grid();
};

struct SummaryRow {
  std::string instance;
  std::string quantity;
  std::string value;
  std::string expected;        // empty when no reference value exists
  std::optional<bool> match;   // empty when nothing is compared
};

struct ExperimentSummary {
  std::vector<SummaryRow> rows;
  std::vector<std::filesystem::path> certificates;
  /// False iff some comparison or certificate recheck failed.
  bool ok() const;
};

/// Error message for an instance that violates preconditions, if any.
std::optional<std::string> validate(const GridInstance& g);

/// Runs every grid task, writes one certificate per task under
/// out_dir/certificates, then summary.csv and summary.txt. Line-oriented
/// progress goes to `log` when given.
ExperimentSummary run_experiments(const ExperimentConfig& config, std::ostream* log = nullptr);

std::string summary_csv(const ExperimentSummary& s);
std::string summary_table(const ExperimentSummary& s);

}  // namespace fingeo
