#include "sucap/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sucap {
namespace {

using nlohmann::json;

double db_to_linear(double v_db) { return std::pow(10.0, v_db / 10.0); }

std::vector<double> number_list(const json& j, const std::string& key) {
  std::vector<double> out;
  if (j.is_number()) {
    out.push_back(j.get<double>());
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (!e.is_number()) throw ConfigError(key + ": expected numbers");
      out.push_back(e.get<double>());
    }
  } else {
    throw ConfigError(key + ": expected a number or an array of numbers");
  }
  return out;
}

ScenarioId scenario_from_string(const std::string& s) {
  if (s == "S1") return ScenarioId::S1;
  if (s == "S2") return ScenarioId::S2;
  if (s == "S3") return ScenarioId::S3;
  if (s == "S4") return ScenarioId::S4;
  if (s == "S5") return ScenarioId::S5;
  throw ConfigError("unknown scenario \"" + s + "\" (expected S1..S5)");
}

RunMode mode_from_string(const std::string& s) {
  if (s == "analytic") return RunMode::analytic;
  if (s == "montecarlo") return RunMode::montecarlo;
  if (s == "both") return RunMode::both;
  throw ConfigError("unknown mode \"" + s +
                    "\" (expected analytic, montecarlo, or both)");
}

// Strips a trailing "_db" and reports whether it was present.
bool split_db_suffix(const std::string& key, std::string& base) {
  constexpr const char* suffix = "_db";
  if (key.size() > 3 && key.compare(key.size() - 3, 3, suffix) == 0) {
    base = key.substr(0, key.size() - 3);
    return true;
  }
  base = key;
  return false;
}

void apply_override(ParamOverrides& ov, const std::string& key, double value) {
  std::string base;
  bool is_db = split_db_suffix(key, base);
  double v = is_db ? db_to_linear(value) : value;
  if (base == "pp") ov.Pp = v;
  else if (base == "pm") ov.Pm = v;
  else if (base == "sigma2_p") ov.sigma2_p = v;
  else if (base == "sigma2_s") ov.sigma2_s = v;
  else if (base == "omega_p") ov.Omega_p = v;
  else if (base == "omega_s") ov.Omega_s = v;
  else if (base == "omega_sp") ov.Omega_sp = v;
  else if (base == "omega_ps") ov.Omega_ps = v;
  else if (base == "gamma_t") ov.gamma_T = v;
  else if (base == "alpha") ov.alpha = v;
  else if (base == "rho") ov.rho = v;
  else throw ConfigError("unknown override key \"" + key + "\"");
}

}  // namespace

std::string default_out_dir() {
  if (const char* env = std::getenv("SUCAP_OUTPUT_DIR"); env && *env) return env;
  return "results";
}

std::string run_mode_name(RunMode m) {
  switch (m) {
    case RunMode::analytic: return "analytic";
    case RunMode::montecarlo: return "montecarlo";
    case RunMode::both: return "both";
  }
  return "?";
}

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be an object");

  ExperimentConfig cfg;
  cfg.scenarios.clear();
  cfg.out_dir = default_out_dir();

  for (const auto& [key, val] : j.items()) {
    if (key == "scenarios") {
      if (val.is_string()) {
        cfg.scenarios.push_back(scenario_from_string(val.get<std::string>()));
      } else if (val.is_array()) {
        for (const auto& e : val)
          cfg.scenarios.push_back(scenario_from_string(e.get<std::string>()));
      } else {
        throw ConfigError("scenarios: expected a string or array of strings");
      }
    } else if (key == "c1") {
      cfg.c1_values = number_list(val, "c1");
    } else if (key == "c2") {
      cfg.c2_values = number_list(val, "c2");
    } else if (key == "alpha") {
      cfg.alpha = val.get<double>();
    } else if (key == "rho") {
      cfg.rho = val.get<double>();
    } else if (key == "mode") {
      cfg.mode = mode_from_string(val.get<std::string>());
    } else if (key == "out_dir") {
      cfg.out_dir = val.get<std::string>();
    } else if (key == "mc") {
      if (!val.is_object()) throw ConfigError("mc: expected an object");
      for (const auto& [mk, mv] : val.items()) {
        if (mk == "n_samples") cfg.mc.n_samples = mv.get<std::uint64_t>();
        else if (mk == "seed") cfg.mc.seed = mv.get<std::uint64_t>();
        else if (mk == "stream_count") cfg.mc.stream_count = mv.get<int>();
        else throw ConfigError("unknown mc key \"" + mk + "\"");
      }
    } else if (key == "grid") {
      if (!val.is_object()) throw ConfigError("grid: expected an object");
      for (const auto& [gk, gv] : val.items()) {
        if (gk == "y_max") cfg.grid.y_max = gv.get<double>();
        else if (gk == "y_points") cfg.grid.y_points = gv.get<int>();
        else throw ConfigError("unknown grid key \"" + gk + "\"");
      }
    } else if (key == "overrides") {
      if (!val.is_object()) throw ConfigError("overrides: expected an object");
      for (const auto& [ok, ov] : val.items()) {
        if (!ov.is_number())
          throw ConfigError("overrides." + ok + ": expected a number");
        apply_override(cfg.overrides, ok, ov.get<double>());
      }
    } else {
      throw ConfigError("unknown config key \"" + key + "\"");
    }
  }

  validate_config(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.scenarios.empty())
    throw ConfigError("config must list at least one scenario");
  if (cfg.c1_values.empty()) throw ConfigError("c1 grid must be non-empty");
  if (cfg.c2_values.empty()) throw ConfigError("c2 grid must be non-empty");
  for (double v : cfg.c1_values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError("c1 values must be positive and finite");
  for (double v : cfg.c2_values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError("c2 values must be positive and finite");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    throw ConfigError("alpha must lie in (0, 1)");
  if (!(cfg.rho >= 0.0 && cfg.rho < 1.0))
    throw ConfigError("rho must lie in [0, 1)");
  if (cfg.mc.n_samples == 0)
    throw ConfigError("mc.n_samples must be at least 1");
  if (cfg.mc.stream_count < 1)
    throw ConfigError("mc.stream_count must be at least 1");
  if (!(cfg.grid.y_max > 0.0))
    throw ConfigError("grid.y_max must be positive");
  if (cfg.grid.y_points < 2)
    throw ConfigError("grid.y_points must be at least 2");
  if (cfg.out_dir.empty())
    throw ConfigError("out_dir must be non-empty");
}

}  // namespace sucap
