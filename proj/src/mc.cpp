#include "sucap/mc.hpp"

#include <algorithm>
#include <cmath>

#include "sucap/policy.hpp"
#include "sucap/rng.hpp"

namespace sucap {

namespace {

// Fixed slot layout within a draw's 16 uniform slots:
//   0 g_p   1 g_s   2 g_sp   3 g_ps          (exponential scenarios)
//   4-5 h_p_hat    6-7 h_sp_hat              (S5 complex estimates)
//   8-9 e_p        10-11 e_sp                (S5 innovation terms)
//   12-15 conditional redraws for the constraint-satisfaction check
struct S5Estimates {
  double hp_re = 0.0, hp_im = 0.0;
  double hsp_re = 0.0, hsp_im = 0.0;
};

ChannelDraw make_draw(const SystemParams& p, ScenarioId scenario,
                      const DrawVariates& dv, S5Estimates* est) {
  ChannelDraw d;
  d.g_s = dv.exponential(1, p.Omega_s);
  d.g_ps = dv.exponential(3, p.Omega_ps);
  if (scenario == ScenarioId::S5) {
    const double sp = std::sqrt(0.5 * p.Omega_p);
    const double ssp = std::sqrt(0.5 * p.Omega_sp);
    const auto zp = dv.normal_pair(4);
    const auto zsp = dv.normal_pair(6);
    const auto ep = dv.normal_pair(8);
    const auto esp = dv.normal_pair(10);
    const double hp_re = sp * zp[0], hp_im = sp * zp[1];
    const double hsp_re = ssp * zsp[0], hsp_im = ssp * zsp[1];
    const double r = p.rho;
    const double q = std::sqrt(1.0 - r * r);
    const double tp_re = r * hp_re + q * sp * ep[0];
    const double tp_im = r * hp_im + q * sp * ep[1];
    const double tsp_re = r * hsp_re + q * ssp * esp[0];
    const double tsp_im = r * hsp_im + q * ssp * esp[1];
    d.g_p_hat = hp_re * hp_re + hp_im * hp_im;
    d.g_sp_hat = hsp_re * hsp_re + hsp_im * hsp_im;
    d.g_p = tp_re * tp_re + tp_im * tp_im;
    d.g_sp = tsp_re * tsp_re + tsp_im * tsp_im;
    if (est) *est = {hp_re, hp_im, hsp_re, hsp_im};
  } else {
    d.g_p = dv.exponential(0, p.Omega_p);
    d.g_sp = dv.exponential(2, p.Omega_sp);
  }
  return d;
}

// Redraw of what the policy did not know, given what it knew, for one draw
// whose outage constraint is active.  Returns the primary SINR under the
// redraw at transmit power pt.
double conditional_pu_sinr(const SystemParams& p, ScenarioId scenario,
                           const ChannelDraw& d, const S5Estimates& est,
                           const DrawVariates& dv, double pt) {
  ChannelDraw r = d;
  switch (scenario) {
    case ScenarioId::S1:
      break;  // nothing unknown
    case ScenarioId::S2:
      r.g_sp = dv.exponential(12, p.Omega_sp);
      break;
    case ScenarioId::S3:
      r.g_p = dv.exponential(12, p.Omega_p);
      break;
    case ScenarioId::S4:
      r.g_p = dv.exponential(12, p.Omega_p);
      r.g_sp = dv.exponential(13, p.Omega_sp);
      break;
    case ScenarioId::S5: {
      const double sp = std::sqrt(0.5 * p.Omega_p);
      const double ssp = std::sqrt(0.5 * p.Omega_sp);
      const auto ep = dv.normal_pair(12);
      const auto esp = dv.normal_pair(14);
      const double rho = p.rho;
      const double q = std::sqrt(1.0 - rho * rho);
      const double tp_re = rho * est.hp_re + q * sp * ep[0];
      const double tp_im = rho * est.hp_im + q * sp * ep[1];
      const double tsp_re = rho * est.hsp_re + q * ssp * esp[0];
      const double tsp_im = rho * est.hsp_im + q * ssp * esp[1];
      r.g_p = tp_re * tp_re + tp_im * tp_im;
      r.g_sp = tsp_re * tsp_re + tsp_im * tsp_im;
      break;
    }
  }
  return pu_sinr(p, r, pt);
}

}  // namespace

ChannelDraw draw_channels(const SystemParams& p, ScenarioId scenario,
                          std::uint64_t seed, std::uint64_t index) {
  DrawVariates dv(seed, index);
  return make_draw(p, scenario, dv, nullptr);
}

std::vector<double> empirical_cdf(std::vector<double> samples,
                                  const std::vector<double>& grid) {
  std::sort(samples.begin(), samples.end());
  std::vector<double> out(grid.size());
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto it = std::upper_bound(samples.begin(), samples.end(), grid[i]);
    out[i] = (n > 0) ? static_cast<double>(it - samples.begin()) / n : 0.0;
  }
  return out;
}

McSummary run(const SystemParams& p, const McConfig& cfg,
              const std::vector<double>& capacity_grid, const QuadSpec& s5_quad) {
  validate_or_throw(p);
  const std::vector<double> grid =
      capacity_grid.empty() ? default_capacity_grid() : capacity_grid;
  const std::uint64_t n = cfg.n_samples;
  if (n == 0) throw std::invalid_argument("run: n_samples must be positive");

  std::vector<double> caps(n);
  std::vector<double> powers(n);
  std::uint64_t blocked = 0;
  std::uint64_t at_cap = 0;
  std::uint64_t active = 0;
  std::uint64_t satisfied = 0;
  double sum = 0.0;
  double sumsq = 0.0;
  // Pathwise floor check needs slack for the rounding in ps itself.
  const double floor_tol = p.gamma_T * (1.0 - 1e-9);

  for (std::uint64_t i = 0; i < n; ++i) {
    const DrawVariates dv(cfg.seed, i);
    S5Estimates est;
    const ChannelDraw d = make_draw(p, cfg.scenario, dv, &est);
    const PolicyOutput po = apply_policy(p, cfg.scenario, d, s5_quad);
    const double c = capacity(su_sinr(p, d, po.pt));
    caps[i] = c;
    powers[i] = po.pt;
    sum += c;
    sumsq += c * c;
    if (po.blocked) ++blocked;
    if (po.pt == p.Pm) ++at_cap;

    if (cfg.scenario == ScenarioId::S1) {
      if (po.pt > 0.0) {
        ++active;
        if (pu_sinr(p, d, po.pt) >= floor_tol) ++satisfied;
      }
    } else if (po.ps_unclamped > 0.0 && po.ps_unclamped < p.Pm) {
      ++active;
      if (conditional_pu_sinr(p, cfg.scenario, d, est, dv, po.pt) >= p.gamma_T) {
        ++satisfied;
      }
    }
  }

  McSummary s;
  s.n_samples = n;
  s.blocking_rate = static_cast<double>(blocked) / static_cast<double>(n);
  s.max_power_rate = static_cast<double>(at_cap) / static_cast<double>(n);
  s.n_constraint_active = active;
  s.constraint_satisfaction_rate =
      active > 0 ? static_cast<double>(satisfied) / static_cast<double>(active) : 0.0;
  s.mean_capacity = sum / static_cast<double>(n);
  const double var =
      n > 1 ? std::max(0.0, (sumsq - sum * s.mean_capacity) / static_cast<double>(n - 1))
            : 0.0;
  s.mean_capacity_se = std::sqrt(var / static_cast<double>(n));

  s.empirical_capacity_cdf = {grid, empirical_cdf(std::move(caps), grid),
                              CurveKind::cdf_capacity, cfg.scenario, 0.0};
  const auto pt_grid = linspace(0.0, p.Pm, 201);
  s.pt_cdf = {pt_grid, empirical_cdf(std::move(powers), pt_grid),
              CurveKind::cdf_pt, cfg.scenario, 0.0};
  return s;
}

}  // namespace sucap
