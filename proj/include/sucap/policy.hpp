#pragma once

#include "sucap/model.hpp"
#include "sucap/numerics.hpp"
#include "sucap/specfun.hpp"

// Secondary transmit-power policies for the five knowledge scenarios:
//   S1: both g_p and g_sp known exactly
//   S2: g_p known, only the statistics of g_sp
//   S3: g_sp known, only the statistics of g_p
//   S4: statistics only on both
//   S5: outdated estimates of g_p and g_sp with correlation rho
// S1 meets the SINR floor pathwise; S2-S5 allow outage probability alpha.

namespace sucap {

struct PolicyOutput {
  double ps_unclamped = 0.0;  // policy power before [0, Pm] clamping
  double pt = 0.0;            // transmitted power; 0 exactly when blocked
  bool blocked = false;
};

// Parameters of the scenario-5 outage constraint at candidate power ps.
// With X ~ ncx2(lambda1), Y ~ ncx2(lambda2) (2 dof each), the constraint is
//   E_Y[ F_X(a_coef Y + beta) ] = alpha.
struct Scenario5Terms {
  double lambda1 = 0.0;  // 2 rho^2 g_p_hat / (Omega_p (1 - rho^2))
  double lambda2 = 0.0;  // 2 rho^2 g_sp_hat / (Omega_sp (1 - rho^2))
  double a_coef = 0.0;   // gamma_T ps Omega_sp / (Omega_p Pp)
  double beta = 0.0;     // 2 gamma_T sigma2_p / (Omega_p Pp (1 - rho^2))
};

struct Scenario3Aux {
  double Q = 0.0;  // -(log(1 - alpha) Pp Omega_p / gamma_T + sigma2_p)
};

double clamp_power(double ps, double pm);

PolicyOutput power_s1(const SystemParams& p, double g_p, double g_sp);
PolicyOutput power_s2(const SystemParams& p, double g_p);
Scenario3Aux scenario3_aux(const SystemParams& p);
PolicyOutput power_s3(const SystemParams& p, double g_sp);
PolicyOutput power_s4(const SystemParams& p);

Scenario5Terms make_scenario5_terms(const SystemParams& p, double ps,
                                    double g_p_hat, double g_sp_hat);

// E_Y[F_X(a Y + beta)] - alpha, by quadrature over the density of Y.
// Strictly increasing in ps (through a_coef).
double s5_constraint_residual(const SystemParams& p, const Scenario5Terms& t,
                              const QuadSpec& quad = {});

// Same expectation through its series form:
//   sum_j Pois_j(lambda1/2) (1 - T_j),
//   T_j = pref * sum_{r<=j} sum_{s<=r} (beta/2)^{r-s}/(r-s)!
//         * (a/(1+a))^s M_{-s-1/2,0}(lambda2 / (2(1+a))),
//   pref = exp(-(lambda2+beta)/2 + lambda2/(4(1+a))) sqrt(2/(lambda2 (1+a))).
// For lambda2 = 0 the prefactor degenerates to exp(-beta/2)/(1+a) with M = 1.
double s5_series_lhs(const Scenario5Terms& t, const SeriesControl& ctl = {});

// Scenario-5 power: zero (blocked) when even ps = 0 violates the constraint,
// Pm when the constraint still holds at the cap, otherwise the root of the
// residual in (0, Pm).
PolicyOutput power_s5(const SystemParams& p, double g_p_hat, double g_sp_hat,
                      const QuadSpec& quad = {}, const RootSpec& root = {});

// Dispatch on scenario, picking the gains the policy is allowed to see.
PolicyOutput apply_policy(const SystemParams& p, ScenarioId scenario,
                          const ChannelDraw& d, const QuadSpec& s5_quad = {},
                          const RootSpec& s5_root = {});

}  // namespace sucap
