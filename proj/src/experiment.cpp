#include "sucap/experiment.hpp"

#include <cmath>
#include <filesystem>

#include "sucap/dist.hpp"
#include "sucap/mc.hpp"
#include "sucap/report.hpp"

namespace sucap {
namespace {

struct CellRows {
  std::vector<ResultRow> cdf;
  std::vector<ResultRow> blocking;
  std::vector<ResultRow> pt;
  std::vector<ResultRow> mean;
};

ResultRow base_row(ScenarioId sc, const ExperimentConfig& cfg, double c1,
                   double c2) {
  ResultRow r;
  r.scenario = scenario_name(sc);
  r.c1 = c1;
  r.c2 = c2;
  r.alpha = cfg.overrides.alpha.value_or(cfg.alpha);
  r.rho = cfg.overrides.rho.value_or(cfg.rho);
  return r;
}

void append_curve(std::vector<ResultRow>& out, ResultRow proto,
                  const DistributionCurve& curve, const std::string& method,
                  double err, std::uint64_t seed) {
  proto.kind = curve_kind_name(curve.kind);
  proto.method = method;
  proto.err = err;
  proto.seed = seed;
  for (std::size_t i = 0; i < curve.abscissae.size(); ++i) {
    proto.x = curve.abscissae[i];
    proto.value = curve.values[i];
    out.push_back(proto);
  }
}

double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void run_cell(const ExperimentConfig& cfg, ScenarioId sc, double c1, double c2,
              CellRows& rows) {
  const SystemParams params =
      make_params_from_ratios(c1, c2, cfg.alpha, cfg.rho, cfg.overrides);
  const std::vector<double> grid = linspace(0.0, cfg.grid.y_max, cfg.grid.y_points);
  const ResultRow proto = base_row(sc, cfg, c1, c2);

  const bool want_analytic = cfg.mode != RunMode::montecarlo;
  const bool want_mc = cfg.mode != RunMode::analytic;

  McConfig mcc;
  mcc.n_samples = cfg.mc.n_samples;
  mcc.seed = cfg.mc.seed;
  mcc.scenario = sc;
  mcc.stream_count = cfg.mc.stream_count;

  DistributionCurve analytic_curve;
  bool have_analytic_curve = false;
  if (want_analytic) {
    analytic_curve = capacity_cdf(sc, params, grid, {}, mcc);
    have_analytic_curve = true;
    const bool mc_backed = sc == ScenarioId::S5;
    append_curve(rows.cdf, proto, analytic_curve, mc_backed ? "mc" : "analytic",
                 analytic_curve.quad_error, mc_backed ? mcc.seed : 0);

    ResultRow b = proto;
    b.kind = "blocking";
    b.x = 0.0;
    b.value = blocking_probability(sc, params);
    b.method = "analytic";
    rows.blocking.push_back(b);
  }

  if (want_mc) {
    const McSummary s = run(params, mcc, grid);
    // In "both" mode S5 already contributed its MC curve above; do not run
    // or record it twice.
    const bool s5_dup = sc == ScenarioId::S5 && have_analytic_curve;
    if (!s5_dup) {
      append_curve(rows.cdf, proto, s.empirical_capacity_cdf, "mc", 0.0, mcc.seed);
    }

    ResultRow b = proto;
    b.kind = "blocking";
    b.x = 0.0;
    b.value = s.blocking_rate;
    b.method = "mc";
    b.seed = mcc.seed;
    rows.blocking.push_back(b);

    append_curve(rows.pt, proto, s.pt_cdf, "mc", 0.0, mcc.seed);

    ResultRow m = proto;
    m.kind = "mean_capacity";
    m.x = 0.0;
    m.value = s.mean_capacity;
    m.method = "mc";
    m.err = s.mean_capacity_se;
    m.seed = mcc.seed;
    rows.mean.push_back(m);

    if (have_analytic_curve && sc != ScenarioId::S5) {
      ResultRow ks = proto;
      ks.kind = "ks_capacity";
      ks.x = 0.0;
      ks.value = sup_distance(analytic_curve.values, s.empirical_capacity_cdf.values);
      ks.method = "mc";
      ks.seed = mcc.seed;
      rows.cdf.push_back(ks);

      ResultRow am = proto;
      am.kind = "mean_capacity";
      am.x = 0.0;
      am.value = mean_capacity(sc, params);
      am.method = "analytic";
      rows.mean.push_back(am);
    }
  }
}

std::string dstr(double v) { return format_double(v); }

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  namespace fs = std::filesystem;
  const fs::path out(cfg.out_dir);

  ExperimentResult result;
  std::vector<std::pair<std::string, std::string>> manifest;
  manifest.emplace_back("schema_version", std::to_string(kCsvSchemaVersion));
  manifest.emplace_back("tool_version", kToolVersion);
  manifest.emplace_back("mode", run_mode_name(cfg.mode));
  {
    std::string s;
    for (std::size_t i = 0; i < cfg.scenarios.size(); ++i) {
      if (i) s += ',';
      s += scenario_name(cfg.scenarios[i]);
    }
    manifest.emplace_back("scenarios", s);
  }
  auto join = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += format_double(v[i]);
    }
    return s;
  };
  manifest.emplace_back("c1", join(cfg.c1_values));
  manifest.emplace_back("c2", join(cfg.c2_values));
  manifest.emplace_back("alpha", dstr(cfg.alpha));
  manifest.emplace_back("rho", dstr(cfg.rho));
  manifest.emplace_back("grid.y_max", dstr(cfg.grid.y_max));
  manifest.emplace_back("grid.y_points", std::to_string(cfg.grid.y_points));
  manifest.emplace_back("mc.n_samples", std::to_string(cfg.mc.n_samples));
  manifest.emplace_back("mc.seed", std::to_string(cfg.mc.seed));
  manifest.emplace_back("mc.stream_count", std::to_string(cfg.mc.stream_count));
  manifest.emplace_back("out_dir", cfg.out_dir);

  auto put_override = [&](const char* key, const std::optional<double>& v) {
    if (v) manifest.emplace_back(std::string("override.") + key, dstr(*v));
  };
  put_override("pp", cfg.overrides.Pp);
  put_override("pm", cfg.overrides.Pm);
  put_override("sigma2_p", cfg.overrides.sigma2_p);
  put_override("sigma2_s", cfg.overrides.sigma2_s);
  put_override("omega_p", cfg.overrides.Omega_p);
  put_override("omega_s", cfg.overrides.Omega_s);
  put_override("omega_sp", cfg.overrides.Omega_sp);
  put_override("omega_ps", cfg.overrides.Omega_ps);
  put_override("gamma_t", cfg.overrides.gamma_T);
  put_override("alpha", cfg.overrides.alpha);
  put_override("rho", cfg.overrides.rho);

  int cell = 0;
  for (double c1 : cfg.c1_values) {
    for (double c2 : cfg.c2_values) {
      const SystemParams p =
          make_params_from_ratios(c1, c2, cfg.alpha, cfg.rho, cfg.overrides);
      const std::string pre = "param." + std::to_string(cell++) + ".";
      manifest.emplace_back(pre + "c1", dstr(c1));
      manifest.emplace_back(pre + "c2", dstr(c2));
      manifest.emplace_back(pre + "pp", dstr(p.Pp));
      manifest.emplace_back(pre + "pm", dstr(p.Pm));
      manifest.emplace_back(pre + "sigma_p2", dstr(p.sigma2_p));
      manifest.emplace_back(pre + "sigma_s2", dstr(p.sigma2_s));
      manifest.emplace_back(pre + "omega_p", dstr(p.Omega_p));
      manifest.emplace_back(pre + "omega_s", dstr(p.Omega_s));
      manifest.emplace_back(pre + "omega_sp", dstr(p.Omega_sp));
      manifest.emplace_back(pre + "omega_ps", dstr(p.Omega_ps));
      manifest.emplace_back(pre + "gamma_t", dstr(p.gamma_T));
      manifest.emplace_back(pre + "alpha", dstr(p.alpha));
      manifest.emplace_back(pre + "rho", dstr(p.rho));
    }
  }

  for (ScenarioId sc : cfg.scenarios) {
    CellRows rows;
    for (double c1 : cfg.c1_values)
      for (double c2 : cfg.c2_values) run_cell(cfg, sc, c1, c2, rows);

    const std::string s = scenario_name(sc);
    auto emit = [&](const std::string& quantity, const std::vector<ResultRow>& r) {
      if (r.empty()) return;
      const std::string path = (out / (s + "_" + quantity + ".csv")).string();
      write_csv(path, r);
      result.csv_paths.push_back(path);
      manifest.emplace_back("file." + std::to_string(result.csv_paths.size() - 1),
                            path);
    };
    emit("cdf_capacity", rows.cdf);
    emit("blocking", rows.blocking);
    emit("pt_cdf", rows.pt);
    emit("mean_capacity", rows.mean);
  }

  result.manifest_path = (out / "manifest.txt").string();
  write_manifest(result.manifest_path, manifest);
  return result;
}

}  // namespace sucap
