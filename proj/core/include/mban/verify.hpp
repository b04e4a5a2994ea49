#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include "mban/configuration.hpp"
#include "mban/dynamics.hpp"

namespace mban {

/// Transient statistics for one initial ones-count.
struct DensityStats {
  std::uint64_t count = 0;
  std::uint64_t max_transient = 0;
  std::uint64_t total_transient = 0;

  friend bool operator==(const DensityStats&, const DensityStats&) = default;
};

struct Counterexample {
  Configuration initial;
  TrajectoryOutcome outcome;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class VerifyMode { Exhaustive, Sampled };

/// Outcome of a density-classification check.
///
/// `solves` means every checked orbit ended at the uniform fixed point of its
/// initial majority. Otherwise `counterexample` holds the failing initial
/// configuration with the lowest integer value and its orbit. The histogram
/// covers every checked configuration, failing ones included.
struct DctVerdict {
  bool solves = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t max_transient = 0;
  std::map<std::size_t, DensityStats> histogram;
  std::uint64_t configs_checked = 0;
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t seed = 0;     ///< sampled mode only
  std::uint64_t samples = 0;  ///< sampled mode only

  friend bool operator==(const DctVerdict&, const DctVerdict&) = default;
};

struct VerifyOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned jobs = 1;
  /// Largest n accepted by the exhaustive sweep.
  std::size_t max_exhaustive_nodes = 24;
};

/// Checks all 2^n configurations. Throws DomainError for even n and
/// BudgetError when n exceeds `max_exhaustive_nodes`.
DctVerdict verify_dct_exhaustive(const MajorityNetwork& net, const VerifyOptions& options = {});

/// Checks `samples` configurations drawn by sample_configuration(n, seed, i).
/// A passing verdict only means no counterexample was found.
/// Throws DomainError for even n and ParameterError for samples == 0.
DctVerdict verify_dct_sampled(const MajorityNetwork& net, std::uint64_t samples,
                              std::uint64_t seed, const VerifyOptions& options = {});

/// Draw `index` of the stratified sampler: even indices take a ones-count in
/// {floor(n/2), ceil(n/2)}, odd indices a ones-count drawn uniformly from the
/// remaining densities; the positions of the ones are uniform. Pure function
/// of its arguments.
Configuration sample_configuration(std::size_t n, std::uint64_t seed, std::uint64_t index);

struct DensityProfile {
  std::uint64_t count = 0;
  std::uint64_t max_transient = 0;
  double mean_transient = 0.0;
};

/// Per ones-count transient statistics over all 2^n configurations.
/// Same preconditions as verify_dct_exhaustive.
std::map<std::size_t, DensityProfile> convergence_profile(const MajorityNetwork& net,
                                                          const VerifyOptions& options = {});

/// Worker count after resolving 0 to the hardware concurrency.
unsigned resolve_jobs(unsigned jobs) noexcept;

}  // namespace mban
