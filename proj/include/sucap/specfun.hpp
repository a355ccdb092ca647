#pragma once

// Special functions needed by the power-policy and distribution code:
// exponential integral E1, modified Bessel I0, Kummer's confluent
// hypergeometric M, Whittaker M with second index 0, and the noncentral
// chi-square CDF/PDF with 2 degrees of freedom.

namespace sucap {

struct SeriesControl {
  double abs_tol = 1e-12;
  int max_terms = 10000;
};

// E1(x) for x > 0.  Power series for x <= 1, continued fraction above.
// Underflows to exactly 0 for x > 700.
double exp_integral_e1(double x);

// e^x * E1(x); usable where E1 itself underflows (large x).
double exp_integral_e1_scaled(double x);

// Gamma(0, x) == E1(x).
double upper_incomplete_gamma0(double x);

// I0(x) for x >= 0.  Power series below 20, asymptotic expansion above.
double bessel_i0(double x);

// e^-x * I0(x); stays finite for large x (tested up to 1e4).
double bessel_i0_scaled(double x);

// Kummer's M(a; b; z) = 1F1(a; b; z) for a >= 0, b > 0, z >= 0.
double kummer_m(double a, double b, double z, const SeriesControl& ctl = {});

// Whittaker M_{kappa,mu}(z) for mu = 0, z > 0:
//   M_{kappa,0}(z) = e^{-z/2} sqrt(z) M(1/2 - kappa; 1; z).
// Only mu = 0 is supported; other values are rejected.
double whittaker_m(double kappa, double mu, double z, const SeriesControl& ctl = {});

// CDF of the noncentral chi-square with 2 degrees of freedom and
// noncentrality lambda, evaluated at x.  Poisson mixture of central
// chi-square terms, anchored at the Poisson mode so the weights never
// underflow; the truncated tail weight is kept below ctl.abs_tol.
double ncx2_cdf(double lambda, double x, const SeriesControl& ctl = {});

// PDF of the same distribution:
//   f(x) = 1/2 exp(-(x + lambda)/2) I0(sqrt(lambda x))
// evaluated as 1/2 exp(-(sqrt(x) - sqrt(lambda))^2 / 2) * [e^-s I0(s)]
// with s = sqrt(lambda x), which avoids overflow for large arguments.
double ncx2_pdf(double lambda, double x);

}  // namespace sucap
