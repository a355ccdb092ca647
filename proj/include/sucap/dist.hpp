#pragma once

#include <optional>

#include "sucap/curves.hpp"
#include "sucap/mc.hpp"
#include "sucap/model.hpp"
#include "sucap/numerics.hpp"

// Distributions of the received power gamma = pt g_s, the secondary SINR
// gamma_I, and the capacity, plus mean capacity and blocking probability.
// Scenarios 1-4 are analytic (closed forms or one-dimensional quadrature);
// scenario 5 has no tractable SINR law, so its capacity curve and mean are
// delegated to the Monte Carlo engine.

namespace sucap {

// CDF of gamma at x >= 0.  S1/S3/S4 are closed-form; S2 needs one finite
// integral.  x = 0 returns the blocking atom.
double cdf_gamma(ScenarioId sc, const SystemParams& p, double x,
                 const QuadSpec& quad = {});

// CDF of the SINR at y_tilde >= 0, mixing cdf_gamma over the primary
// interference gain.  S1/S2 by quadrature, S3/S4 closed-form.
double cdf_gamma_i(ScenarioId sc, const SystemParams& p, double y_tilde,
                   const QuadSpec& quad = {});

// PDF of the SINR at y_tilde > 0 for scenarios 1-3.
double pdf_gamma_i(ScenarioId sc, const SystemParams& p, double y_tilde,
                   const QuadSpec& quad = {});

// Capacity CDF on the grid (default_capacity_grid() when empty).  For S5
// the values come from mc::run under mc_cfg (or its defaults).
DistributionCurve capacity_cdf(ScenarioId sc, const SystemParams& p,
                               const std::vector<double>& y_grid = {},
                               const QuadSpec& quad = {},
                               const std::optional<McConfig>& mc_cfg = {});

// E[log2(1 + gamma_I)].  S1-S3 integrate the SINR pdf against log2(1+x);
// S4 reduces to a single integral; S5 falls back to Monte Carlo.
double mean_capacity(ScenarioId sc, const SystemParams& p,
                     const QuadSpec& quad = {},
                     const std::optional<McConfig>& mc_cfg = {});

// Pr(pt = 0).  Closed-form for S1-S4; S5 solves for the estimate gain at
// which the single-CDF constraint becomes feasible.
double blocking_probability(ScenarioId sc, const SystemParams& p,
                            const RootSpec& root = {});

}  // namespace sucap
