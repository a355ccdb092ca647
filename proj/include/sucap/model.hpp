#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// System description for one primary/secondary transmitter pair sharing a
// band.  Channel power gains are exponential with the Omega_* means; the
// primary link is protected by an SINR floor gamma_T that the secondary
// power policy must respect, either surely (full knowledge) or with outage
// probability alpha (statistical knowledge).

namespace sucap {

enum class ScenarioId { S1, S2, S3, S4, S5 };

struct SystemParams {
  double Pp = 1.0;        // primary transmit power
  double Pm = 1.0;        // secondary power cap
  double sigma2_p = 1.0;  // noise at the primary receiver
  double sigma2_s = 1.0;  // noise at the secondary receiver
  double Omega_p = 1.0;   // mean gain, primary link
  double Omega_s = 1.0;   // mean gain, secondary link
  double Omega_ps = 1.0;  // mean gain, primary Tx -> secondary Rx
  double Omega_sp = 1.0;  // mean gain, secondary Tx -> primary Rx
  double gamma_T = 1.0;   // primary SINR floor
  double alpha = 0.1;     // allowed primary outage probability (S2-S5)
  double rho = 0.9;       // estimate correlation (S5); must satisfy 0 <= rho < 1
};

struct DerivedRatios {
  double c1 = 0.0;  // Omega_sp / Omega_s
  double c2 = 0.0;  // gamma_T sigma2_p / (Pp Omega_p)
};

// One realization of the channel gains.  g_p_hat / g_sp_hat carry the
// outdated estimates used by the scenario-5 policy; zero elsewhere.
struct ChannelDraw {
  double g_p = 0.0;
  double g_s = 0.0;
  double g_ps = 0.0;
  double g_sp = 0.0;
  double g_p_hat = 0.0;
  double g_sp_hat = 0.0;
};

struct ParamOverrides {
  std::optional<double> Pp, Pm, sigma2_p, sigma2_s;
  std::optional<double> Omega_p, Omega_s, Omega_ps, Omega_sp;
  std::optional<double> gamma_T, alpha, rho;
};

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& msg, std::vector<std::string> v)
      : std::invalid_argument(msg), violations(std::move(v)) {}
  std::vector<std::string> violations;
};

// Returns the list of violated constraints (empty when valid).
std::vector<std::string> validate(const SystemParams& p);
void validate_or_throw(const SystemParams& p);

DerivedRatios derived_ratios(const SystemParams& p);

// Construction from the two ratios with the default base values
//   Pp = Pm = 1, sigma2 = 1, Omega_p = Omega_s = 10^0.5,
//   Omega_sp = c1 Omega_s, Omega_ps = Omega_sp,
//   gamma_T = c2 Pp Omega_p / sigma2_p, alpha = 0.1, rho = 0.9.
// Overrides replace individual fields after the defaults are computed (the
// dependent fields are not re-derived), then the result is re-validated.
SystemParams make_params_from_ratios(double c1, double c2,
                                     const ParamOverrides& o = {});

// Same, with alpha and rho set before the overrides are applied.
SystemParams make_params_from_ratios(double c1, double c2, double alpha,
                                     double rho, const ParamOverrides& o = {});

// Secondary-link SINR under transmit power pt.
double su_sinr(const SystemParams& p, const ChannelDraw& d, double pt);

// Shannon capacity log2(1 + gamma) in bits/s/Hz.
double capacity(double gamma_i);

// Primary-link SINR under secondary transmit power ps.
double pu_sinr(const SystemParams& p, const ChannelDraw& d, double ps);

const char* scenario_name(ScenarioId s);

}  // namespace sucap
