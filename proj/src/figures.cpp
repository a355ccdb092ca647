#include "sucap/figures.hpp"

#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "sucap/dist.hpp"
#include "sucap/mc.hpp"
#include "sucap/report.hpp"

namespace sucap {
namespace {

constexpr double kDefaultAlpha = 0.1;
constexpr double kDefaultRho = 0.9;

struct FigureContext {
  std::vector<ResultRow> rows;
  std::vector<std::pair<std::string, std::string>> manifest;
  std::uint64_t samples;
  std::uint64_t seed;
};

ResultRow proto_row(ScenarioId sc, double c1, double c2, double alpha, double rho) {
  ResultRow r;
  r.scenario = scenario_name(sc);
  r.c1 = c1;
  r.c2 = c2;
  r.alpha = alpha;
  r.rho = rho;
  return r;
}

void push_curve(FigureContext& ctx, ResultRow proto, const DistributionCurve& c,
                const std::string& method, std::uint64_t seed) {
  proto.kind = curve_kind_name(c.kind);
  proto.method = method;
  proto.err = method == "analytic" ? c.quad_error : 0.0;
  proto.seed = seed;
  for (std::size_t i = 0; i < c.abscissae.size(); ++i) {
    proto.x = c.abscissae[i];
    proto.value = c.values[i];
    ctx.rows.push_back(proto);
  }
}

// One capacity-CDF series; scenario 5 comes from the Monte Carlo engine.
void capacity_series(FigureContext& ctx, ScenarioId sc, double c1, double c2,
                     double alpha, double rho) {
  const SystemParams p = make_params_from_ratios(c1, c2, alpha, rho);
  McConfig mcc;
  mcc.n_samples = ctx.samples;
  mcc.seed = ctx.seed;
  mcc.scenario = sc;
  const DistributionCurve curve = capacity_cdf(sc, p, {}, {}, mcc);
  const bool mc_backed = sc == ScenarioId::S5;
  push_curve(ctx, proto_row(sc, c1, c2, alpha, rho), curve,
             mc_backed ? "mc" : "analytic", mc_backed ? ctx.seed : 0);
}

void capacity_family(FigureContext& ctx, double c1) {
  for (ScenarioId sc : {ScenarioId::S1, ScenarioId::S2, ScenarioId::S3,
                        ScenarioId::S4, ScenarioId::S5})
    capacity_series(ctx, sc, c1, 0.1, kDefaultAlpha, kDefaultRho);
}

void fig2(FigureContext& ctx) { capacity_family(ctx, 0.1); }
void fig3(FigureContext& ctx) { capacity_family(ctx, 0.01); }

void fig4(FigureContext& ctx) {
  capacity_family(ctx, 0.9);
  // Variant curves just above the S3/S4 blocking threshold 1 - e^{-0.1}.
  for (ScenarioId sc : {ScenarioId::S3, ScenarioId::S4})
    capacity_series(ctx, sc, 0.9, 0.1, 0.096, kDefaultRho);
}

void fig5(FigureContext& ctx) {
  for (double c1 : {0.1, 0.9}) {
    for (ScenarioId sc : {ScenarioId::S1, ScenarioId::S2}) {
      const SystemParams p = make_params_from_ratios(c1, 0.1, kDefaultAlpha,
                                                     kDefaultRho);
      McConfig mcc;
      mcc.n_samples = ctx.samples;
      mcc.seed = ctx.seed;
      mcc.scenario = sc;
      const McSummary s = run(p, mcc);
      push_curve(ctx, proto_row(sc, c1, 0.1, kDefaultAlpha, kDefaultRho),
                 s.pt_cdf, "mc", ctx.seed);
    }
  }
}

void fig6(FigureContext& ctx) {
  for (double c2 : {0.5, 0.9})
    for (ScenarioId sc : {ScenarioId::S1, ScenarioId::S2})
      capacity_series(ctx, sc, 0.01, c2, kDefaultAlpha, kDefaultRho);
}

void fig7(FigureContext& ctx) {
  // Geometric c1 sweep spanning the regimes of the other capacity figures.
  const int n = 25;
  std::vector<double> c1s(n);
  const double lo = 0.01, hi = 1.0;
  for (int i = 0; i < n; ++i)
    c1s[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  const double y = 0.5;
  const double x_sinr = std::exp2(y) - 1.0;
  for (double c2 : {0.5, 0.9}) {
    for (ScenarioId sc : {ScenarioId::S1, ScenarioId::S2}) {
      for (double c1 : c1s) {
        const SystemParams p =
            make_params_from_ratios(c1, c2, kDefaultAlpha, kDefaultRho);
        ResultRow r = proto_row(sc, c1, c2, kDefaultAlpha, kDefaultRho);
        r.kind = "capacity_outage";
        r.x = c1;
        r.value = cdf_gamma_i(sc, p, x_sinr);
        r.method = "analytic";
        ctx.rows.push_back(r);
      }
    }
  }
}

void fig8(FigureContext& ctx) {
  const std::vector<double> c2s = linspace(0.05, 0.95, 19);
  for (ScenarioId sc : {ScenarioId::S1, ScenarioId::S2}) {
    for (double c2 : c2s) {
      const SystemParams p =
          make_params_from_ratios(0.1, c2, kDefaultAlpha, kDefaultRho);
      ResultRow r = proto_row(sc, 0.1, c2, kDefaultAlpha, kDefaultRho);
      r.kind = "blocking";
      r.x = c2;
      r.value = blocking_probability(sc, p);
      r.method = "analytic";
      ctx.rows.push_back(r);
    }
  }
  for (double rho : {0.9, 0.99}) {
    for (double alpha : {0.1, 0.3}) {
      for (double c2 : c2s) {
        const SystemParams p = make_params_from_ratios(0.1, c2, alpha, rho);
        ResultRow r = proto_row(ScenarioId::S5, 0.1, c2, alpha, rho);
        r.kind = "blocking";
        r.x = c2;
        r.value = blocking_probability(ScenarioId::S5, p);
        r.method = "analytic";
        ctx.rows.push_back(r);
      }
    }
  }
}

}  // namespace

bool figure_id_known(const std::string& id) {
  return id == "fig2" || id == "fig3" || id == "fig4" || id == "fig5" ||
         id == "fig6" || id == "fig7" || id == "fig8";
}

FigureResult reproduce_figure(const std::string& id, const std::string& out_dir,
                              std::uint64_t samples, std::uint64_t seed) {
  if (!figure_id_known(id)) {
    throw std::invalid_argument("unknown figure id \"" + id +
                                "\" (expected fig2..fig8)");
  }
  FigureContext ctx;
  ctx.samples = samples;
  ctx.seed = seed;

  if (id == "fig2") fig2(ctx);
  else if (id == "fig3") fig3(ctx);
  else if (id == "fig4") fig4(ctx);
  else if (id == "fig5") fig5(ctx);
  else if (id == "fig6") fig6(ctx);
  else if (id == "fig7") fig7(ctx);
  else fig8(ctx);

  namespace fs = std::filesystem;
  const fs::path out(out_dir);
  FigureResult res;
  res.csv_path = (out / (id + ".csv")).string();
  res.manifest_path = (out / (id + "_manifest.txt")).string();
  res.row_count = ctx.rows.size();
  write_csv(res.csv_path, ctx.rows);

  ctx.manifest.emplace_back("schema_version", std::to_string(kCsvSchemaVersion));
  ctx.manifest.emplace_back("tool_version", kToolVersion);
  ctx.manifest.emplace_back("figure", id);
  ctx.manifest.emplace_back("samples", std::to_string(samples));
  ctx.manifest.emplace_back("seed", std::to_string(seed));
  ctx.manifest.emplace_back("rows", std::to_string(res.row_count));
  ctx.manifest.emplace_back("file.0", res.csv_path);
  write_manifest(res.manifest_path, ctx.manifest);
  return res;
}

}  // namespace sucap
