#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sucap/model.hpp"

// Experiment configuration loaded from JSON.  Keys ending in "_db" are
// converted to linear scale (10^(v/10)) once at parse time; everything
// downstream works in linear units.

namespace sucap {

enum class RunMode { analytic, montecarlo, both };

std::string run_mode_name(RunMode m);

struct GridSpec {
  double y_max = 8.0;
  int y_points = 161;
};

struct McSettings {
  std::uint64_t n_samples = 1000000;
  std::uint64_t seed = 20260819;
  int stream_count = 1;
};

struct ExperimentConfig {
  std::vector<ScenarioId> scenarios;
  std::vector<double> c1_values{0.1};
  std::vector<double> c2_values{0.1};
  double alpha = 0.1;
  double rho = 0.9;
  RunMode mode = RunMode::analytic;
  std::string out_dir = "results";
  McSettings mc;
  GridSpec grid;
  ParamOverrides overrides;
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// $SUCAP_OUTPUT_DIR when set, else "results".  Configs that do not name an
// out_dir get this value at parse time.
std::string default_out_dir();

// Parses and validates; throws ConfigError with a descriptive message on
// malformed JSON, unknown keys, or violated invariants.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

void validate_config(const ExperimentConfig& cfg);

}  // namespace sucap
