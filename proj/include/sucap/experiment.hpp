#pragma once

#include <string>
#include <vector>

#include "sucap/config.hpp"

// Sweep orchestration: runs the configured (scenario, c1, c2) grid and
// persists one CSV per (scenario, quantity) plus a manifest that is enough
// to reproduce the run byte for byte.

namespace sucap {

struct ExperimentResult {
  std::vector<std::string> csv_paths;
  std::string manifest_path;
};

// Quantities per mode:
//   analytic    cdf_capacity, blocking
//   montecarlo  cdf_capacity, blocking, pt_cdf, mean_capacity
//   both        the union, with analytic and mc rows side by side and a
//               ks_capacity row per grid cell where both curves exist
// Scenario 5 has no analytic capacity curve; its cdf rows always carry
// method=mc with the seed that produced them.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace sucap
