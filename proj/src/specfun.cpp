#include "sucap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sucap {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// Modified Lentz evaluation of the continued fraction for e^x E1(x), x >= 1:
//   e^x E1(x) = 1 / (x + 1 - 1^2 / (x + 3 - 2^2 / (x + 5 - ...)))
double e1_cf_scaled(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 300; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    // Tolerance must exceed one ulp of 1.0: for x large enough that b += 2
    // is absorbed, del repeats at 1 +/- ulp forever and can get no closer.
    if (std::fabs(del - 1.0) < 4e-16) return h;
  }
  throw std::runtime_error("exp_integral_e1: continued fraction did not converge");
}

// E1(x) = -gamma - log x + sum_{k>=1} (-1)^{k+1} x^k / (k k!), for 0 < x <= 1.
double e1_series(double x) {
  double sum = -kEulerGamma - std::log(x);
  double term = 1.0;
  for (int k = 1; k <= 64; ++k) {
    term *= -x / k;
    sum -= term / k;
    if (std::fabs(term) / k < 1e-17 * std::max(1.0, std::fabs(sum))) break;
  }
  return sum;
}

// Regularized lower incomplete gamma P(a, x) for a >= 1; series for
// x < a + 1, continued fraction for the complement otherwise.
double reg_gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double lpre = -x + a * std::log(x) - std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < 10000; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(lpre);
  }
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 4e-16) break;
  }
  return 1.0 - h * std::exp(lpre);
}

// Poisson pmf with mean m at integer j, in the log domain.
double poisson_pmf(double m, double j) {
  return std::exp(-m + j * std::log(m) - std::lgamma(j + 1.0));
}

}  // namespace

double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_e1: requires x > 0");
  if (x > 700.0) return 0.0;  // covers x = inf
  if (x <= 1.0) return e1_series(x);
  return std::exp(-x) * e1_cf_scaled(x);
}

double exp_integral_e1_scaled(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_e1_scaled: requires x > 0");
  if (std::isinf(x)) return 0.0;  // e^x E1(x) -> 1/x
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return e1_cf_scaled(x);
}

double upper_incomplete_gamma0(double x) { return exp_integral_e1(x); }

double bessel_i0(double x) {
  if (x < 0.0) throw std::domain_error("bessel_i0: requires x >= 0");
  if (x < 20.0) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 120; ++k) {
      term *= q / (static_cast<double>(k) * k);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return sum;
  }
  return std::exp(x) * bessel_i0_scaled(x);
}

double bessel_i0_scaled(double x) {
  if (x < 0.0) throw std::domain_error("bessel_i0_scaled: requires x >= 0");
  if (x < 20.0) return std::exp(-x) * bessel_i0(x);
  // Asymptotic expansion: I0(x) ~ e^x / sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k)
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 40; ++k) {
    const double m = 2.0 * k - 1.0;
    const double next = term * m * m / (8.0 * k * x);
    if (next >= term) break;  // divergent tail of the asymptotic series
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum / std::sqrt(kTwoPi * x);
}

double kummer_m(double a, double b, double z, const SeriesControl& ctl) {
  if (a < 0.0) throw std::domain_error("kummer_m: requires a >= 0");
  if (!(b > 0.0)) throw std::domain_error("kummer_m: requires b > 0");
  if (z < 0.0) throw std::domain_error("kummer_m: requires z >= 0");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    term *= (a + k) * z / ((b + k) * (k + 1.0));
    sum += term;
    if (std::fabs(term) <= ctl.abs_tol * std::max(1.0, std::fabs(sum))) return sum;
  }
  throw std::runtime_error("kummer_m: series did not converge within max_terms");
}

double whittaker_m(double kappa, double mu, double z, const SeriesControl& ctl) {
  if (mu != 0.0) throw std::domain_error("whittaker_m: only mu = 0 is supported");
  if (!(z > 0.0)) throw std::domain_error("whittaker_m: requires z > 0");
  return std::exp(-0.5 * z) * std::sqrt(z) * kummer_m(0.5 - kappa, 1.0, z, ctl);
}

double ncx2_cdf(double lambda, double x, const SeriesControl& ctl) {
  if (lambda < 0.0) throw std::domain_error("ncx2_cdf: requires lambda >= 0");
  if (x < 0.0) throw std::domain_error("ncx2_cdf: requires x >= 0");
  if (x == 0.0) return 0.0;
  const double u = 0.5 * lambda;
  const double v = 0.5 * x;
  if (u == 0.0) return -std::expm1(-v);

  // sum_j e^-u u^j / j! * P(j + 1, v), anchored at j0 = floor(u).
  const double j0 = std::floor(u);
  const double w0 = (j0 == 0.0) ? std::exp(-u) : poisson_pmf(u, j0);
  const double g0 = reg_gamma_p(j0 + 1.0, v);
  double sum = w0 * g0;
  double wacc = w0;

  // Downward sweep: G_{j} = G_{j+1} + pmf_v(j+1).
  {
    double w = w0;
    double g = g0;
    double pd = poisson_pmf(v, j0);  // pmf of v at index j+1 when j = j0 - 1
    for (double j = j0 - 1.0; j >= 0.0; j -= 1.0) {
      w *= (j + 1.0) / u;
      g += pd;
      if (g > 1.0) g = 1.0;
      pd *= (j + 1.0) / v;
      sum += w * g;
      wacc += w;
      if (w * (j + 1.0) / std::max(u - j, 1.0) < 0.5 * ctl.abs_tol) break;
    }
  }

  // Upward sweep: G_{j+1} = G_j - pmf_v(j+1); remaining contribution is
  // bounded by the unaccumulated Poisson weight times the current G.
  {
    double w = w0;
    double g = g0;
    double pu = poisson_pmf(v, j0 + 1.0);
    double j = j0;
    for (int n = 0; n < ctl.max_terms; ++n) {
      j += 1.0;
      w *= u / j;
      g -= pu;
      if (g < 0.0) g = 0.0;
      pu *= v / (j + 1.0);
      sum += w * g;
      wacc += w;
      const double unaccounted = std::max(0.0, 1.0 - wacc);
      if (unaccounted * g <= 0.5 * ctl.abs_tol) {
        return std::clamp(sum, 0.0, 1.0);
      }
    }
  }
  throw std::runtime_error("ncx2_cdf: tail bound not met within max_terms");
}

double ncx2_pdf(double lambda, double x) {
  if (lambda < 0.0) throw std::domain_error("ncx2_pdf: requires lambda >= 0");
  if (!(x > 0.0)) throw std::domain_error("ncx2_pdf: requires x > 0");
  const double sx = std::sqrt(x);
  const double sl = std::sqrt(lambda);
  const double d = sx - sl;
  return 0.5 * std::exp(-0.5 * d * d) * bessel_i0_scaled(sx * sl);
}

}  // namespace sucap
