#include "sucap/model.hpp"

#include <cmath>

namespace sucap {

std::vector<std::string> validate(const SystemParams& p) {
  std::vector<std::string> v;
  auto positive = [&v](double x, const char* name) {
    if (!(x > 0.0) || std::isinf(x)) {
      v.push_back(std::string(name) + " must be positive and finite");
    }
  };
  positive(p.Pp, "Pp");
  positive(p.Pm, "Pm");
  positive(p.sigma2_p, "sigma2_p");
  positive(p.sigma2_s, "sigma2_s");
  positive(p.Omega_p, "Omega_p");
  positive(p.Omega_s, "Omega_s");
  positive(p.Omega_ps, "Omega_ps");
  positive(p.Omega_sp, "Omega_sp");
  positive(p.gamma_T, "gamma_T");
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) {
    v.push_back("alpha must lie in (0, 1)");
  }
  if (!(p.rho >= 0.0 && p.rho < 1.0)) {
    v.push_back("rho must lie in [0, 1)");
  }
  return v;
}

void validate_or_throw(const SystemParams& p) {
  auto v = validate(p);
  if (v.empty()) return;
  std::string msg = "invalid parameters:";
  for (const auto& s : v) msg += " " + s + ";";
  throw ValidationError(msg, std::move(v));
}

DerivedRatios derived_ratios(const SystemParams& p) {
  return {p.Omega_sp / p.Omega_s, p.gamma_T * p.sigma2_p / (p.Pp * p.Omega_p)};
}

SystemParams make_params_from_ratios(double c1, double c2,
                                     const ParamOverrides& o) {
  SystemParams p;
  p.Pp = 1.0;
  p.Pm = 1.0;
  p.sigma2_p = 1.0;
  p.sigma2_s = 1.0;
  p.Omega_p = std::pow(10.0, 0.5);
  p.Omega_s = p.Omega_p;
  p.Omega_sp = c1 * p.Omega_s;
  p.Omega_ps = p.Omega_sp;
  p.gamma_T = c2 * p.Pp * p.Omega_p / p.sigma2_p;
  p.alpha = 0.1;
  p.rho = 0.9;

  if (o.Pp) p.Pp = *o.Pp;
  if (o.Pm) p.Pm = *o.Pm;
  if (o.sigma2_p) p.sigma2_p = *o.sigma2_p;
  if (o.sigma2_s) p.sigma2_s = *o.sigma2_s;
  if (o.Omega_p) p.Omega_p = *o.Omega_p;
  if (o.Omega_s) p.Omega_s = *o.Omega_s;
  if (o.Omega_ps) p.Omega_ps = *o.Omega_ps;
  if (o.Omega_sp) p.Omega_sp = *o.Omega_sp;
  if (o.gamma_T) p.gamma_T = *o.gamma_T;
  if (o.alpha) p.alpha = *o.alpha;
  if (o.rho) p.rho = *o.rho;

  validate_or_throw(p);
  return p;
}

SystemParams make_params_from_ratios(double c1, double c2, double alpha,
                                     double rho, const ParamOverrides& o) {
  ParamOverrides merged = o;
  if (!merged.alpha) merged.alpha = alpha;
  if (!merged.rho) merged.rho = rho;
  return make_params_from_ratios(c1, c2, merged);
}

double su_sinr(const SystemParams& p, const ChannelDraw& d, double pt) {
  return pt * d.g_s / (p.Pp * d.g_ps + p.sigma2_s);
}

double capacity(double gamma_i) { return std::log2(1.0 + gamma_i); }

double pu_sinr(const SystemParams& p, const ChannelDraw& d, double ps) {
  return p.Pp * d.g_p / (ps * d.g_sp + p.sigma2_p);
}

const char* scenario_name(ScenarioId s) {
  switch (s) {
    case ScenarioId::S1: return "S1";
    case ScenarioId::S2: return "S2";
    case ScenarioId::S3: return "S3";
    case ScenarioId::S4: return "S4";
    case ScenarioId::S5: return "S5";
  }
  return "?";
}

}  // namespace sucap
