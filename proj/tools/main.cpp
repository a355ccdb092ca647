#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sucap/config.hpp"
#include "sucap/dist.hpp"
#include "sucap/experiment.hpp"
#include "sucap/figures.hpp"
#include "sucap/report.hpp"

namespace {

void print_error(const std::string& command, const std::string& message) {
  nlohmann::json rec;
  rec["error"] = message;
  rec["command"] = command;
  std::cerr << rec.dump() << '\n';
}

// "a:b:n" -> n points from a to b inclusive.
std::vector<double> parse_grid(const std::string& text) {
  double lo = 0.0, hi = 0.0;
  int n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1 ||
      !(in >> std::ws).eof()) {
    throw std::invalid_argument("grid must look like lo:hi:n with n >= 1, got \"" +
                                text + "\"");
  }
  return sucap::linspace(lo, hi, n);
}

int cmd_run(const std::string& config_path) {
  const sucap::ExperimentConfig cfg = sucap::load_config(config_path);
  const sucap::ExperimentResult res = sucap::run_experiment(cfg);
  for (const auto& p : res.csv_paths) std::cout << p << '\n';
  std::cout << res.manifest_path << '\n';
  return 0;
}

int cmd_validate(const std::string& config_path) {
  sucap::load_config(config_path);
  std::cout << "ok\n";
  return 0;
}

int cmd_figure(const std::string& id, const std::string& out_dir,
               std::uint64_t samples, std::uint64_t seed) {
  const sucap::FigureResult res = sucap::reproduce_figure(id, out_dir, samples, seed);
  std::cout << res.csv_path << '\n' << res.manifest_path << '\n';
  return 0;
}

int cmd_blocking(const std::string& scenario, const std::string& grid_text,
                 double c1, double alpha, double rho) {
  const std::vector<double> c2s = parse_grid(grid_text);
  sucap::ScenarioId sc;
  if (scenario == "S1") sc = sucap::ScenarioId::S1;
  else if (scenario == "S2") sc = sucap::ScenarioId::S2;
  else if (scenario == "S3") sc = sucap::ScenarioId::S3;
  else if (scenario == "S4") sc = sucap::ScenarioId::S4;
  else if (scenario == "S5") sc = sucap::ScenarioId::S5;
  else throw std::invalid_argument("unknown scenario \"" + scenario + "\"");

  std::cout << sucap::kCsvHeader << '\n';
  for (double c2 : c2s) {
    const sucap::SystemParams p = sucap::make_params_from_ratios(c1, c2, alpha, rho);
    sucap::ResultRow r;
    r.scenario = scenario;
    r.c1 = c1;
    r.c2 = c2;
    r.alpha = alpha;
    r.rho = rho;
    r.kind = "blocking";
    r.x = c2;
    r.value = sucap::blocking_probability(sc, p);
    r.method = "analytic";
    std::cout << sucap::csv_line(r) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secondary-user capacity and blocking calculator"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run an experiment sweep from a JSON config");
  run->add_option("config", config_path, "Path to the JSON config")->required();

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a JSON config and exit");
  validate->add_option("config", validate_path, "Path to the JSON config")->required();

  std::string fig_id;
  std::string fig_out = sucap::default_out_dir();
  std::uint64_t fig_samples = 1000000;
  std::uint64_t fig_seed = 20260819;
  auto* figure = app.add_subcommand("figure", "Write the data behind a result figure");
  figure->add_option("id", fig_id, "One of fig2..fig8")->required();
  figure->add_option("--out", fig_out, "Output directory");
  figure->add_option("--samples", fig_samples, "Monte Carlo sample count");
  figure->add_option("--seed", fig_seed, "Monte Carlo seed");

  std::string blk_scenario;
  std::string blk_grid;
  double blk_c1 = 0.1, blk_alpha = 0.1, blk_rho = 0.9;
  auto* blocking = app.add_subcommand("blocking", "Print blocking probability on a c2 grid");
  blocking->add_option("--scenario", blk_scenario, "S1..S5")->required();
  blocking->add_option("--c2-grid", blk_grid, "lo:hi:n")->required();
  blocking->add_option("--c1", blk_c1, "c1 ratio (default 0.1)");
  blocking->add_option("--alpha", blk_alpha, "outage level (default 0.1)");
  blocking->add_option("--rho", blk_rho, "estimate correlation (default 0.9)");

  CLI11_PARSE(app, argc, argv);

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (run->parsed()) return cmd_run(config_path);
    if (validate->parsed()) return cmd_validate(validate_path);
    if (figure->parsed()) return cmd_figure(fig_id, fig_out, fig_samples, fig_seed);
    if (blocking->parsed())
      return cmd_blocking(blk_scenario, blk_grid, blk_c1, blk_alpha, blk_rho);
  } catch (const std::exception& e) {
    print_error(cmd, e.what());
    return 1;
  }
  print_error(cmd, "no subcommand handled");
  return 2;
}
