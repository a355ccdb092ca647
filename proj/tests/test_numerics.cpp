#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sucap/numerics.hpp"
#include "sucap/specfun.hpp"

using namespace sucap;

TEST_CASE("finite-interval quadrature") {
  auto poly = [](double x) { return x * x * x - 2.0 * x + 1.0; };
  QuadResult q = integrate(poly, 0.0, 2.0);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-12));  // x^4/4 - x^2 + x at 2
  CHECK(q.error <= 1e-8);

  q = integrate([](double x) { return std::sin(x); }, 0.0, 3.14159265358979323846);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-12));

  // sqrt(pi)/2 over the positive half of the Gaussian
  q = integrate([](double x) { return std::exp(-x * x); }, 0.0, 12.0);
  CHECK(q.value == doctest::Approx(0.886226925452758).epsilon(1e-11));
}

TEST_CASE("integrable endpoint behavior") {
  // int_0^1 x log x dx = -1/4; the integrand must never be called at 0
  auto f = [](double x) { return x * std::log(x); };
  QuadResult q = integrate(f, 0.0, 1.0);
  CHECK(q.value == doctest::Approx(-0.25).epsilon(1e-10));
}

TEST_CASE("semi-infinite quadrature") {
  // int_0^inf e^-t/(1+t) dt = e E1(1)
  auto f = [](double t) { return std::exp(-t) / (1.0 + t); };
  QuadResult q = integrate(f, 0.0, infinity);
  CHECK(q.value == doctest::Approx(0.5963473623231941).epsilon(1e-10));

  // shifted lower endpoint: int_1^inf e^-t dt = e^-1
  q = integrate([](double t) { return std::exp(-t); }, 1.0, infinity);
  CHECK(q.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-11));

  // mean of an exponential with a slowly varying factor
  q = integrate([](double t) { return t * std::exp(-t / 3.0) / 3.0; }, 0.0, infinity);
  CHECK(q.value == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("quadrature failure carries the best estimate") {
  QuadSpec strict{1e-16, 1e-16, 4};
  auto f = [](double x) { return std::cos(50.0 * x * x); };
  try {
    integrate(f, 0.0, 3.0, strict);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.best_estimate));
    CHECK(e.achieved_error > 0.0);
  }
}

TEST_CASE("root finding") {
  RootSpec spec;
  const double r = find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, spec);
  CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  const double r2 = find_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0);
  CHECK(std::cos(r2) - r2 == doctest::Approx(0.0).epsilon(1e-10));

  CHECK_THROWS_AS(
      find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, spec),
      std::invalid_argument);

  RootSpec starved{1e-30, 2};
  CHECK_THROWS_AS(
      find_root([](double x) { return std::atan(x - 0.7654321); }, -4.0, 9.0, starved),
      std::runtime_error);
}

TEST_CASE("auto bracket") {
  auto f = [](double x) { return 1.0 - x; };
  Bracket b = auto_bracket(f, 0.1, 2.0);
  CHECK(b.lo < 1.0);
  CHECK(b.hi > 1.0);

  // downward expansion when the root sits below x0
  auto g = [](double x) { return std::log(x) + 2.0; };  // root at e^-2
  b = auto_bracket(g, 10.0, 2.0);
  CHECK(b.lo <= std::exp(-2.0));
  CHECK(b.hi >= std::exp(-2.0));
  CHECK(find_root(g, b.lo, b.hi) == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));

  // strictly positive function never brackets
  CHECK_THROWS_AS(auto_bracket([](double x) { return 1.0 + x * x; }, 1.0, 2.0),
                  BracketNotFound);
  CHECK_THROWS_AS(auto_bracket([](double) { return 1.0; }, 0.0, 2.0),
                  std::invalid_argument);
}

TEST_CASE("quadrature of specfun integrands used downstream") {
  // normalization of the noncentral chi-square density
  auto f = [](double x) { return ncx2_pdf(7.5, x); };
  QuadResult q = integrate(f, 0.0, infinity);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-9));

  // CDF consistency: integral of the pdf up to x equals the cdf at x
  auto g = [](double x) { return ncx2_pdf(4.0, x); };
  QuadResult part = integrate(g, 0.0, 6.0);
  CHECK(part.value == doctest::Approx(ncx2_cdf(4.0, 6.0)).epsilon(1e-10));
}
