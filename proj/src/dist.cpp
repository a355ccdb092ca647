#include "sucap/dist.hpp"

#include <cmath>

#include "sucap/policy.hpp"
#include "sucap/specfun.hpp"

namespace sucap {

namespace {

double log2p1(double x) { return std::log2(1.0 + x); }

// ---- Scenario 1: both gains known ----
// With A = Omega_sp gamma_T / (Pp Omega_p Omega_s), B = 1 / (Pm Omega_s):
//   F_gamma(x) = 1 - e^-c2 e^-Bx (1 - A x e^((A+B)x) E1((A+B)x) e^-(A+B)x)
// written with the scaled E1 so large x cannot overflow.
struct S1Consts {
  double A, B, c2;
};

S1Consts s1_consts(const SystemParams& p) {
  return {p.Omega_sp * p.gamma_T / (p.Pp * p.Omega_p * p.Omega_s),
          1.0 / (p.Pm * p.Omega_s), derived_ratios(p).c2};
}

double fg_s1_cdf(const SystemParams& p, double x) {
  const S1Consts k = s1_consts(p);
  if (x == 0.0) return -std::expm1(-k.c2);
  const double e1s = exp_integral_e1_scaled((k.A + k.B) * x);
  return 1.0 - std::exp(-k.c2 - k.B * x) * (1.0 - k.A * x * e1s);
}

double fg_s1_pdf(const SystemParams& p, double x) {
  const S1Consts k = s1_consts(p);
  const double e1s = exp_integral_e1_scaled((k.A + k.B) * x);
  return std::exp(-k.c2 - k.B * x) *
         ((k.B - k.A) + (k.A * k.A * x + k.A) * e1s);
}

// ---- Scenario 2: g_p known, g_sp statistical ----
struct S2Consts {
  double psi0, psi;  // integration endpoints in the g_p variable
  double la;         // -log(alpha)
};

S2Consts s2_consts(const SystemParams& p) {
  const double psi0 = p.gamma_T * p.sigma2_p / p.Pp;
  const double psi =
      p.gamma_T * (p.sigma2_p - p.Pm * std::log(p.alpha) * p.Omega_sp) / p.Pp;
  return {psi0, psi, -std::log(p.alpha)};
}

double s2_w(const SystemParams& p, const S2Consts& k, double z) {
  return k.la * p.gamma_T * p.Omega_sp /
         ((p.Pp * z - p.gamma_T * p.sigma2_p) * p.Omega_s);
}

QuadResult fg_s2_cdf(const SystemParams& p, double x, const QuadSpec& quad) {
  const S2Consts k = s2_consts(p);
  if (x == 0.0) return {-std::expm1(-derived_ratios(p).c2), 0.0};
  auto f = [&](double z) { return std::exp(-s2_w(p, k, z) * x - z / p.Omega_p); };
  const QuadResult q = integrate(f, k.psi0, k.psi, quad);
  const double v = 1.0 -
                   std::exp(-x / (p.Pm * p.Omega_s) - k.psi / p.Omega_p) -
                   q.value / p.Omega_p;
  return {v, q.error / p.Omega_p};
}

QuadResult fgi_s2_cdf(const SystemParams& p, double ty, const QuadSpec& quad) {
  const S2Consts k = s2_consts(p);
  if (ty == 0.0) return {-std::expm1(-derived_ratios(p).c2), 0.0};
  const double PmOs = p.Pm * p.Omega_s;
  const double PpOps = p.Pp * p.Omega_ps;
  const double head = std::exp(-k.psi / p.Omega_p - ty * p.sigma2_s / PmOs) *
                      PmOs / (ty * PpOps + PmOs);
  auto g = [&](double z) {
    const double w = s2_w(p, k, z);
    return std::exp(-z / p.Omega_p - w * p.sigma2_s * ty) /
           (1.0 + w * PpOps * ty);
  };
  const QuadResult q = integrate(g, k.psi0, k.psi, quad);
  return {1.0 - head - q.value / p.Omega_p, q.error / p.Omega_p};
}

QuadResult fgi_s2_pdf(const SystemParams& p, double ty, const QuadSpec& quad) {
  const S2Consts k = s2_consts(p);
  const double PmOs = p.Pm * p.Omega_s;
  const double PpOps = p.Pp * p.Omega_ps;
  const double s2s = p.sigma2_s;
  const double den0 = ty * PpOps + PmOs;
  const double head = std::exp(-k.psi / p.Omega_p - ty * s2s / PmOs) *
                      (s2s / den0 + PmOs * PpOps / (den0 * den0));
  auto g = [&](double z) {
    const double w = s2_w(p, k, z);
    const double den = 1.0 + w * PpOps * ty;
    return std::exp(-z / p.Omega_p - w * s2s * ty) *
           (w * s2s * den + w * PpOps) / (den * den);
  };
  const QuadResult q = integrate(g, k.psi0, k.psi, quad);
  return {head + q.value / p.Omega_p, q.error / p.Omega_p};
}

// ---- Scenario 3: g_sp known, g_p statistical ----
double fg_s3_cdf(const SystemParams& p, double x) {
  const double Q = scenario3_aux(p).Q;
  if (Q <= 0.0) return 1.0;
  const double PmOs = p.Pm * p.Omega_s;
  const double K = std::exp(-Q / (p.Pm * p.Omega_sp));
  return 1.0 - std::exp(-x / PmOs) * (1.0 - K) -
         std::exp(-x / PmOs) * K / (1.0 + p.Omega_sp * x / (p.Omega_s * Q));
}

double fgi_s3_r(const SystemParams& p, double Q, double ty) {
  return (p.Pp * p.Omega_ps * ty + p.Pm * p.Omega_s) *
         (p.sigma2_s * p.Omega_sp * ty + Q * p.Omega_s) /
         (p.Pm * p.Pp * p.Omega_s * p.Omega_ps * p.Omega_sp * ty);
}

double fgi_s3_cdf(const SystemParams& p, double ty) {
  const double Q = scenario3_aux(p).Q;
  if (Q <= 0.0) return 1.0;
  if (ty == 0.0) return 0.0;
  const double a = p.Pp * p.Omega_ps / (p.Pm * p.Omega_s);
  const double b = p.sigma2_s / (p.Pm * p.Omega_s);
  const double K = std::exp(-Q / (p.Pm * p.Omega_sp));
  const double K2 = Q * p.Omega_s * K / (p.Pp * p.Omega_ps * p.Omega_sp);
  const double r = fgi_s3_r(p, Q, ty);
  return 1.0 - (1.0 - K) * std::exp(-b * ty) / (1.0 + a * ty) -
         K2 * std::exp(-b * ty) * exp_integral_e1_scaled(r) / ty;
}

double fgi_s3_pdf(const SystemParams& p, double ty) {
  const double Q = scenario3_aux(p).Q;
  if (Q <= 0.0) return 0.0;
  const double a = p.Pp * p.Omega_ps / (p.Pm * p.Omega_s);
  const double b = p.sigma2_s / (p.Pm * p.Omega_s);
  const double K = std::exp(-Q / (p.Pm * p.Omega_sp));
  const double K1 = 1.0 - K;
  const double K2 = Q * p.Omega_s * K / (p.Pp * p.Omega_ps * p.Omega_sp);
  const double r = fgi_s3_r(p, Q, ty);
  const double rp = (p.Pp * p.sigma2_s * p.Omega_ps * p.Omega_sp * ty * ty -
                     Q * p.Pm * p.Omega_s * p.Omega_s) /
                    (p.Pm * p.Pp * p.Omega_s * p.Omega_ps * p.Omega_sp * ty * ty);
  const double e1s = exp_integral_e1_scaled(r);
  const double sp = -K1 * std::exp(-b * ty) * (b * (1.0 + a * ty) + a) /
                    ((1.0 + a * ty) * (1.0 + a * ty));
  const double h_e1p =
      K2 * std::exp(-b * ty) * (ty * (rp - b) - 1.0) / (ty * ty) * e1s;
  const double last = K2 * std::exp(-b * ty) * rp / (ty * r);
  return -sp - h_e1p + last;
}

// ---- Scenario 4: statistics only; fixed power ----
double fg_s4_cdf(const SystemParams& p, double x) {
  const PolicyOutput po = power_s4(p);
  if (po.blocked) return 1.0;
  return -std::expm1(-x / (po.pt * p.Omega_s));
}

double fgi_s4_cdf(const SystemParams& p, double ty) {
  const PolicyOutput po = power_s4(p);
  if (po.blocked) return 1.0;
  const double PtOs = po.pt * p.Omega_s;
  return 1.0 - PtOs / (ty * p.Pp * p.Omega_ps + PtOs) *
                   std::exp(-ty * p.sigma2_s / PtOs);
}

// Mixing of the received-power law over the primary interference gain:
//   F_{gamma_I}(ty) = int_0^inf F_gamma(ty (sigma2_s + Pp v)) e^{-v/Omega_ps} / Omega_ps dv
template <class F>
QuadResult mix_over_interference(const SystemParams& p, F&& fg, double ty,
                                 const QuadSpec& quad) {
  auto f = [&](double v) {
    return fg(ty * (p.sigma2_s + p.Pp * v)) * std::exp(-v / p.Omega_ps) /
           p.Omega_ps;
  };
  return integrate(f, 0.0, infinity, quad);
}

template <class F>
QuadResult mix_pdf_over_interference(const SystemParams& p, F&& fg_pdf,
                                     double ty, const QuadSpec& quad) {
  auto f = [&](double v) {
    const double s = p.sigma2_s + p.Pp * v;
    return s * fg_pdf(ty * s) * std::exp(-v / p.Omega_ps) / p.Omega_ps;
  };
  return integrate(f, 0.0, infinity, quad);
}

QuadResult cdf_gamma_i_err(ScenarioId sc, const SystemParams& p, double ty,
                           const QuadSpec& quad) {
  switch (sc) {
    case ScenarioId::S1:
      if (ty == 0.0) return {-std::expm1(-derived_ratios(p).c2), 0.0};
      return mix_over_interference(
          p, [&](double x) { return fg_s1_cdf(p, x); }, ty, quad);
    case ScenarioId::S2:
      return fgi_s2_cdf(p, ty, quad);
    case ScenarioId::S3:
      return {fgi_s3_cdf(p, ty), 0.0};
    case ScenarioId::S4:
      return {fgi_s4_cdf(p, ty), 0.0};
    case ScenarioId::S5:
      break;
  }
  throw std::invalid_argument(
      "cdf_gamma_i: scenario 5 has no analytic SINR law; use the Monte Carlo engine");
}

}  // namespace

double cdf_gamma(ScenarioId sc, const SystemParams& p, double x,
                 const QuadSpec& quad) {
  validate_or_throw(p);
  if (x < 0.0) throw std::domain_error("cdf_gamma: requires x >= 0");
  if (std::isinf(x) && sc != ScenarioId::S5) return 1.0;
  switch (sc) {
    case ScenarioId::S1: return fg_s1_cdf(p, x);
    case ScenarioId::S2: return fg_s2_cdf(p, x, quad).value;
    case ScenarioId::S3: return fg_s3_cdf(p, x);
    case ScenarioId::S4: return fg_s4_cdf(p, x);
    case ScenarioId::S5: break;
  }
  throw std::invalid_argument(
      "cdf_gamma: scenario 5 has no analytic received-power law");
}

double cdf_gamma_i(ScenarioId sc, const SystemParams& p, double y_tilde,
                   const QuadSpec& quad) {
  validate_or_throw(p);
  if (y_tilde < 0.0) throw std::domain_error("cdf_gamma_i: requires y_tilde >= 0");
  if (std::isinf(y_tilde)) return 1.0;
  return cdf_gamma_i_err(sc, p, y_tilde, quad).value;
}

double pdf_gamma_i(ScenarioId sc, const SystemParams& p, double y_tilde,
                   const QuadSpec& quad) {
  validate_or_throw(p);
  if (!(y_tilde > 0.0)) throw std::domain_error("pdf_gamma_i: requires y_tilde > 0");
  switch (sc) {
    case ScenarioId::S1:
      return mix_pdf_over_interference(
                 p, [&](double x) { return fg_s1_pdf(p, x); }, y_tilde, quad)
          .value;
    case ScenarioId::S2:
      return fgi_s2_pdf(p, y_tilde, quad).value;
    case ScenarioId::S3:
      return fgi_s3_pdf(p, y_tilde);
    default:
      break;
  }
  throw std::invalid_argument("pdf_gamma_i: defined for scenarios 1-3 only");
}

DistributionCurve capacity_cdf(ScenarioId sc, const SystemParams& p,
                               const std::vector<double>& y_grid,
                               const QuadSpec& quad,
                               const std::optional<McConfig>& mc_cfg) {
  validate_or_throw(p);
  const std::vector<double> grid =
      y_grid.empty() ? default_capacity_grid() : y_grid;
  if (sc == ScenarioId::S5) {
    McConfig cfg = mc_cfg.value_or(McConfig{});
    cfg.scenario = ScenarioId::S5;
    McSummary s = run(p, cfg, grid);
    return s.empirical_capacity_cdf;
  }
  DistributionCurve curve;
  curve.abscissae = grid;
  curve.kind = CurveKind::cdf_capacity;
  curve.scenario = sc;
  curve.values.reserve(grid.size());
  for (double y : grid) {
    const QuadResult r = cdf_gamma_i_err(sc, p, std::exp2(y) - 1.0, quad);
    curve.values.push_back(r.value);
    curve.quad_error = std::max(curve.quad_error, r.error);
  }
  return curve;
}

double mean_capacity(ScenarioId sc, const SystemParams& p, const QuadSpec& quad,
                     const std::optional<McConfig>& mc_cfg) {
  validate_or_throw(p);
  switch (sc) {
    case ScenarioId::S1:
    case ScenarioId::S2:
    case ScenarioId::S3: {
      if (sc == ScenarioId::S3 && scenario3_aux(p).Q <= 0.0) return 0.0;
      auto f = [&](double x) { return log2p1(x) * pdf_gamma_i(sc, p, x, quad); };
      return integrate(f, 0.0, infinity, quad).value;
    }
    case ScenarioId::S4: {
      const PolicyOutput po = power_s4(p);
      if (po.blocked) return 0.0;
      const double PtOs = po.pt * p.Omega_s;
      const double PpOps = p.Pp * p.Omega_ps;
      const double s2s = p.sigma2_s;
      auto f = [&](double t) {
        const double den = (t - 1.0) * PpOps + PtOs;
        return std::log(t) * std::exp(-(t - 1.0) * s2s / PtOs) *
               (s2s / den + PtOs * PpOps / (den * den));
      };
      return integrate(f, 1.0, infinity, quad).value / std::log(2.0);
    }
    case ScenarioId::S5: {
      McConfig cfg = mc_cfg.value_or(McConfig{});
      cfg.scenario = ScenarioId::S5;
      return run(p, cfg).mean_capacity;
    }
  }
  throw std::invalid_argument("mean_capacity: unknown scenario");
}

double blocking_probability(ScenarioId sc, const SystemParams& p,
                            const RootSpec& root) {
  validate_or_throw(p);
  const double c2 = derived_ratios(p).c2;
  switch (sc) {
    case ScenarioId::S1:
    case ScenarioId::S2:
      return -std::expm1(-c2);
    case ScenarioId::S3:
      return scenario3_aux(p).Q <= 0.0 ? 1.0 : 0.0;
    case ScenarioId::S4:
      return power_s4(p).blocked ? 1.0 : 0.0;
    case ScenarioId::S5: {
      const double r2 = p.rho * p.rho;
      const double beta = 2.0 * c2 / (1.0 - r2);
      const double at_zero = -std::expm1(-0.5 * beta);
      if (at_zero <= p.alpha) return 0.0;  // even lambda1 = 0 is feasible
      if (r2 == 0.0) return 1.0;           // estimate carries no information
      // Blocked exactly when the estimate gain is below g*, where
      // ncx2_cdf(lambda1(g*), beta) = alpha; lambda1 is increasing in the
      // estimate and the CDF decreasing in lambda1.
      auto h = [&](double lam) { return ncx2_cdf(lam, beta) - p.alpha; };
      const Bracket br = auto_bracket(h, std::max(beta, 1.0), 2.0);
      const double lam_star = find_root(h, br.lo, br.hi, root);
      const double g_star = lam_star * p.Omega_p * (1.0 - r2) / (2.0 * r2);
      return -std::expm1(-g_star / p.Omega_p);
    }
  }
  throw std::invalid_argument("blocking_probability: unknown scenario");
}

}  // namespace sucap
