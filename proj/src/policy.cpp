#include "sucap/policy.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace sucap {

namespace {

PolicyOutput from_unclamped(double ps, double pm) {
  const double pt = clamp_power(ps, pm);
  return {ps, pt, pt == 0.0};
}

// Division by a gain that may be zero: a nonpositive numerator blocks, a
// positive one leaves the interference constraint vacuous (power cap binds).
double divide_by_gain(double num, double gain) {
  if (gain > 0.0) return num / gain;
  return num > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

}  // namespace

double clamp_power(double ps, double pm) {
  return std::min(std::max(ps, 0.0), pm);
}

PolicyOutput power_s1(const SystemParams& p, double g_p, double g_sp) {
  const double num = p.Pp * g_p / p.gamma_T - p.sigma2_p;
  return from_unclamped(divide_by_gain(num, g_sp), p.Pm);
}

PolicyOutput power_s2(const SystemParams& p, double g_p) {
  const double num = p.Pp * g_p - p.gamma_T * p.sigma2_p;
  const double ps = -num / (std::log(p.alpha) * p.gamma_T * p.Omega_sp);
  return from_unclamped(ps, p.Pm);
}

Scenario3Aux scenario3_aux(const SystemParams& p) {
  return {-(std::log1p(-p.alpha) * p.Pp * p.Omega_p / p.gamma_T + p.sigma2_p)};
}

PolicyOutput power_s3(const SystemParams& p, double g_sp) {
  const double q = scenario3_aux(p).Q;
  return from_unclamped(divide_by_gain(q, g_sp), p.Pm);
}

PolicyOutput power_s4(const SystemParams& p) {
  const DerivedRatios r = derived_ratios(p);
  const double ps = p.Pp * p.Omega_p / (p.gamma_T * p.Omega_sp) *
                    (std::exp(-r.c2) / (1.0 - p.alpha) - 1.0);
  return from_unclamped(ps, p.Pm);
}

Scenario5Terms make_scenario5_terms(const SystemParams& p, double ps,
                                    double g_p_hat, double g_sp_hat) {
  if (!(p.rho >= 0.0 && p.rho < 1.0)) {
    throw std::domain_error("scenario 5 requires 0 <= rho < 1");
  }
  if (g_p_hat < 0.0 || g_sp_hat < 0.0 || ps < 0.0) {
    throw std::domain_error("scenario 5 requires nonnegative ps and gains");
  }
  const double r2 = p.rho * p.rho;
  const double om = 1.0 - r2;
  Scenario5Terms t;
  t.lambda1 = 2.0 * r2 * g_p_hat / (p.Omega_p * om);
  t.lambda2 = 2.0 * r2 * g_sp_hat / (p.Omega_sp * om);
  t.a_coef = p.gamma_T * ps * p.Omega_sp / (p.Omega_p * p.Pp);
  t.beta = 2.0 * p.gamma_T * p.sigma2_p / (p.Omega_p * p.Pp * om);
  return t;
}

double s5_constraint_residual(const SystemParams& p, const Scenario5Terms& t,
                              const QuadSpec& quad) {
  if (t.a_coef == 0.0) return ncx2_cdf(t.lambda1, t.beta) - p.alpha;
  auto f = [&t](double y) {
    return ncx2_pdf(t.lambda2, y) * ncx2_cdf(t.lambda1, t.a_coef * y + t.beta);
  };
  return integrate(f, 0.0, infinity, quad).value - p.alpha;
}

double s5_series_lhs(const Scenario5Terms& t, const SeriesControl& ctl) {
  const double u = 0.5 * t.lambda1;
  const double a = t.a_coef;
  const double one_a = 1.0 + a;
  const double halfb = 0.5 * t.beta;
  const double z2 = t.lambda2 / (2.0 * one_a);
  const bool degenerate = !(t.lambda2 > 0.0);
  const double pref =
      degenerate ? std::exp(-halfb) / one_a
                 : std::exp(-0.5 * (t.lambda2 + t.beta) + t.lambda2 / (4.0 * one_a)) *
                       std::sqrt(2.0 / (t.lambda2 * one_a));

  std::vector<double> whit;  // M_{-s-1/2,0}(z2), filled lazily
  auto whit_at = [&](int s) {
    while (static_cast<int>(whit.size()) <= s) {
      const int k = static_cast<int>(whit.size());
      whit.push_back(degenerate ? 1.0 : whittaker_m(-k - 0.5, 0.0, z2, ctl));
    }
    return whit[s];
  };

  const double ratio = a / one_a;
  double w = std::exp(-u);  // Poisson weight at j
  double wacc = 0.0;
  double inner = 0.0;  // sum over rows r = 0..j
  double total = 0.0;
  for (int j = 0; j < ctl.max_terms; ++j) {
    if (j > 0) w *= u / j;
    // row r = j: sum_{s<=j} (beta/2)^{j-s}/(j-s)! ratio^s M_s
    double row = 0.0;
    double bcoef = std::exp(j * std::log(halfb) - std::lgamma(j + 1.0));
    double rpow = 1.0;
    for (int s = 0; s <= j; ++s) {
      row += bcoef * rpow * whit_at(s);
      bcoef *= (j - s) / halfb;
      rpow *= ratio;
    }
    inner += row;
    const double tj = std::min(pref * inner, 1.0);
    total += w * (1.0 - tj);
    wacc += w;
    // 1 - T_j decreases in j, so the tail is at most the unaccumulated
    // Poisson weight times the current value.
    const double unaccounted = std::max(0.0, 1.0 - wacc);
    if (unaccounted * (1.0 - tj) <= 0.5 * ctl.abs_tol) return total;
  }
  throw std::runtime_error("s5_series_lhs: series did not converge within max_terms");
}

PolicyOutput power_s5(const SystemParams& p, double g_p_hat, double g_sp_hat,
                      const QuadSpec& quad, const RootSpec& root) {
  auto residual = [&](double ps) {
    return s5_constraint_residual(p, make_scenario5_terms(p, ps, g_p_hat, g_sp_hat),
                                  quad);
  };
  // ps = 0 turns the expectation into a single CDF evaluation.
  if (residual(0.0) >= 0.0) return {0.0, 0.0, true};
  // The residual is increasing in ps; the domain cap Pm bounds the search,
  // so a nonpositive residual at the cap is the bracket-not-found case.
  if (residual(p.Pm) <= 0.0) return {p.Pm, p.Pm, false};
  const double ps = find_root(residual, 0.0, p.Pm, root);
  return {ps, clamp_power(ps, p.Pm), false};
}

PolicyOutput apply_policy(const SystemParams& p, ScenarioId scenario,
                          const ChannelDraw& d, const QuadSpec& s5_quad,
                          const RootSpec& s5_root) {
  switch (scenario) {
    case ScenarioId::S1: return power_s1(p, d.g_p, d.g_sp);
    case ScenarioId::S2: return power_s2(p, d.g_p);
    case ScenarioId::S3: return power_s3(p, d.g_sp);
    case ScenarioId::S4: return power_s4(p);
    case ScenarioId::S5:
      return power_s5(p, d.g_p_hat, d.g_sp_hat, s5_quad, s5_root);
  }
  throw std::invalid_argument("apply_policy: unknown scenario");
}

}  // namespace sucap
