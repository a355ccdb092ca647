#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sucap/specfun.hpp"

using namespace sucap;

// Reference values computed with mpmath (50 digits) and cross-checked
// against scipy.special / scipy.stats where both are available.

TEST_CASE("exponential integral E1") {
  CHECK(exp_integral_e1(1.0) == doctest::Approx(0.21938393439552027).epsilon(1e-13));
  CHECK(exp_integral_e1(1e-8) == doctest::Approx(17.8434650891).epsilon(1e-10));
  CHECK(exp_integral_e1(1e-6) == doctest::Approx(13.238295893062491).epsilon(1e-13));
  CHECK(exp_integral_e1(0.1) == doctest::Approx(1.8229239584193907).epsilon(1e-13));
  CHECK(exp_integral_e1(10.0) == doctest::Approx(4.1569689296853243e-6).epsilon(1e-13));
  CHECK(exp_integral_e1(100.0) == doctest::Approx(3.6835977616820322e-46).epsilon(1e-12));
  CHECK(exp_integral_e1(500.0) == doctest::Approx(1.4220767822536384e-220).epsilon(1e-12));
  CHECK(exp_integral_e1(701.0) == 0.0);
  CHECK(exp_integral_e1(1e6) == 0.0);
  CHECK(upper_incomplete_gamma0(1.0) == exp_integral_e1(1.0));
  CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral_e1(-1.0), std::domain_error);
}

TEST_CASE("scaled exponential integral e^x E1(x)") {
  CHECK(exp_integral_e1_scaled(700.0) ==
        doctest::Approx(0.0014265364183008867).epsilon(1e-12));
  CHECK(exp_integral_e1_scaled(1e4) ==
        doctest::Approx(9.999000199940024e-5).epsilon(1e-12));
  CHECK(exp_integral_e1_scaled(1.0) ==
        doctest::Approx(std::exp(1.0) * 0.21938393439552027).epsilon(1e-13));
  // consistency with the unscaled value where both are representable
  CHECK(exp_integral_e1_scaled(50.0) * std::exp(-50.0) ==
        doctest::Approx(exp_integral_e1(50.0)).epsilon(1e-13));
  CHECK_THROWS_AS(exp_integral_e1_scaled(0.0), std::domain_error);
}

TEST_CASE("modified Bessel I0") {
  CHECK(bessel_i0(0.0) == 1.0);
  CHECK(bessel_i0(1.0) == doctest::Approx(1.2660658777520083).epsilon(1e-13));
  CHECK(bessel_i0(10.0) == doctest::Approx(2815.7166284662545).epsilon(1e-13));
  // both sides of the series/asymptotic switch
  CHECK(bessel_i0(19.9) == doctest::Approx(39513376.520066878).epsilon(1e-12));
  CHECK(bessel_i0(20.1) == doctest::Approx(48017874.107136437).epsilon(1e-12));
  CHECK(bessel_i0_scaled(50.0) == doctest::Approx(0.056561626647454193).epsilon(1e-12));
  CHECK(bessel_i0_scaled(1e4) == doctest::Approx(0.0039894726746047321).epsilon(1e-12));
  CHECK(bessel_i0_scaled(0.5) == doctest::Approx(std::exp(-0.5) * bessel_i0(0.5)));
  CHECK_THROWS_AS(bessel_i0(-0.1), std::domain_error);
  CHECK_THROWS_AS(bessel_i0_scaled(-0.1), std::domain_error);
}

TEST_CASE("Kummer M") {
  CHECK(kummer_m(2.0, 1.0, 1.0) == doctest::Approx(5.4365636569180905).epsilon(1e-13));
  CHECK(kummer_m(1.0, 1.0, 2.0) == doctest::Approx(7.3890560989306502).epsilon(1e-13));
  CHECK(kummer_m(0.0, 1.0, 5.0) == 1.0);  // empty series
  CHECK(kummer_m(3.0, 2.0, 0.0) == 1.0);
  CHECK_THROWS_AS(kummer_m(-1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(kummer_m(1.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(kummer_m(1.0, 1.0, -1.0), std::domain_error);
  SeriesControl tight{1e-12, 3};  // too few terms for z = 30
  CHECK_THROWS_AS(kummer_m(1.0, 1.0, 30.0, tight), std::runtime_error);
}

TEST_CASE("Whittaker M with mu = 0") {
  CHECK(whittaker_m(-0.5, 0.0, 2.0) == doctest::Approx(3.8442310281591168).epsilon(1e-13));
  CHECK(whittaker_m(-1.5, 0.0, 1.0) == doctest::Approx(3.2974425414002563).epsilon(1e-13));
  CHECK(whittaker_m(-2.5, 0.0, 3.0) == doctest::Approx(89.268901495844045).epsilon(1e-13));
  // closed forms: M_{-1/2,0}(z) = sqrt(z) e^{z/2}, M_{1/2,0}(z) = sqrt(z) e^{-z/2}
  CHECK(whittaker_m(-0.5, 0.0, 2.0) == doctest::Approx(std::sqrt(2.0) * std::exp(1.0)));
  CHECK(whittaker_m(0.5, 0.0, 1.4) ==
        doctest::Approx(std::sqrt(1.4) * std::exp(-0.7)).epsilon(1e-13));
  CHECK_THROWS_AS(whittaker_m(-0.5, 0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(whittaker_m(-0.5, 0.0, 0.0), std::domain_error);
}

TEST_CASE("noncentral chi-square CDF, 2 dof") {
  CHECK(ncx2_cdf(2.0, 2.0) == doctest::Approx(0.3457458387231645).epsilon(1e-12));
  CHECK(ncx2_cdf(0.0, 2.0) == doctest::Approx(0.6321205588285577).epsilon(1e-13));
  CHECK(ncx2_cdf(5.0, 3.0) == doctest::Approx(0.22038180929909026).epsilon(1e-12));
  CHECK(ncx2_cdf(20.0, 15.0) == doctest::Approx(0.23563826365442145).epsilon(1e-12));
  CHECK(ncx2_cdf(50.0, 20.0) == doctest::Approx(0.0035987082678616807).epsilon(1e-11));
  CHECK(ncx2_cdf(2.0, 0.0) == 0.0);
  SUBCASE("large noncentrality stays stable") {
    CHECK(ncx2_cdf(1500.0, 1500.0) == doctest::Approx(0.4948492479517399).epsilon(1e-11));
    CHECK(ncx2_cdf(1500.0, 1400.0) == doctest::Approx(0.09235444537368664).epsilon(1e-11));
    CHECK(ncx2_cdf(3000.0, 2800.0) == doctest::Approx(0.030984524563197807).epsilon(1e-11));
  }
  SUBCASE("monotone in x, decreasing in lambda") {
    CHECK(ncx2_cdf(2.0, 1.0) < ncx2_cdf(2.0, 2.0));
    CHECK(ncx2_cdf(3.0, 2.0) < ncx2_cdf(2.0, 2.0));
  }
  CHECK_THROWS_AS(ncx2_cdf(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ncx2_cdf(1.0, -1.0), std::domain_error);
}

TEST_CASE("noncentral chi-square PDF, 2 dof") {
  CHECK(ncx2_pdf(3.0, 2.0) == doctest::Approx(0.12992368712887847).epsilon(1e-12));
  CHECK(ncx2_pdf(0.0, 2.0) == doctest::Approx(0.18393972058572114).epsilon(1e-13));
  CHECK(ncx2_pdf(1500.0, 1500.0) == doctest::Approx(0.005150752048259799).epsilon(1e-12));
  CHECK_THROWS_AS(ncx2_pdf(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(ncx2_pdf(-1.0, 1.0), std::domain_error);
}
