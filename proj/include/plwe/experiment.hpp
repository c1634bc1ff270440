#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plwe/attack.hpp"
#include "plwe/forge.hpp"

// The reproduction harness: ntests runs against a decision oracle and ntests
// against a uniform oracle, with per-distribution failure rates and separate
// sampling/attack wall-clock means.

namespace plwe {

enum class ExperimentMode {
  Direct,  // a drawn directly in R_{q,0}; b = a*s + e (or uniform)
  X0       // a uniform in R_q, samples collected through x0 rejection
};

struct ExperimentConfig {
  ParameterSet params;
  std::uint64_t ntests = 0;
  std::uint64_t M = 0;
  std::uint64_t seed = 0;
  std::optional<double> theta;  // when set, M is planned from the region size
  ExperimentMode mode = ExperimentMode::Direct;
};

struct DistributionStats {
  std::uint64_t failures = 0;
  double failure_rate = 0.0;
  double mean_sampling_s = 0.0;  // rounded to 3 decimals
  double mean_attack_s = 0.0;    // rounded to 3 decimals
  std::vector<VerdictKind> verdicts;  // ordered by run index
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string version;
  std::uint64_t region_size = 0;
  double region_bound = 0.0;
  std::uint64_t effective_M = 0;
  DistributionStats plwe;
  DistributionStats uniform;
};

// Worker count for the run pool: PLWE_WORKERS env override, else hardware
// concurrency, always at least 1.
unsigned experiment_workers();

// A decision run fails unless exactly one guess survives; a uniform run
// fails unless zero guesses survive.  Verdict sequences depend only on the
// config and seed, never on worker scheduling.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace plwe
