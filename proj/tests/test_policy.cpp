#include <cmath>

#include "doctest.h"
#include "sucap/policy.hpp"

using namespace sucap;

namespace {
const SystemParams kP = make_params_from_ratios(0.1, 0.1);
}

TEST_CASE("clamping") {
  CHECK(clamp_power(-0.5, 1.0) == 0.0);
  CHECK(clamp_power(0.25, 1.0) == 0.25);
  CHECK(clamp_power(7.0, 1.0) == 1.0);
}

TEST_CASE("scenario 1 power, full knowledge") {
  // ps = (Pp g_p / gamma_T - sigma2_p) / g_sp, clamped to [0, Pm].
  const double gt = kP.gamma_T;
  const double g_sp = 0.5;

  SUBCASE("interior") {
    const double g_p = 2.0 * gt;  // numerator = 2 - 1 = 1
    const PolicyOutput o = power_s1(kP, g_p, g_sp);
    CHECK(o.ps_unclamped == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(o.pt == kP.Pm);  // clamped
    CHECK_FALSE(o.blocked);
  }
  SUBCASE("blocked at the SINR floor") {
    const PolicyOutput o = power_s1(kP, gt * kP.sigma2_p / kP.Pp, g_sp);
    CHECK(o.pt == 0.0);
    CHECK(o.blocked);
  }
  SUBCASE("zero cross gain with positive headroom is cap-limited") {
    const PolicyOutput o = power_s1(kP, 2.0 * gt, 0.0);
    CHECK(o.pt == kP.Pm);
    CHECK_FALSE(o.blocked);
  }
  SUBCASE("zero cross gain without headroom blocks") {
    const PolicyOutput o = power_s1(kP, 0.5 * gt, 0.0);
    CHECK(o.pt == 0.0);
    CHECK(o.blocked);
  }
}

TEST_CASE("scenario 2 power matches its closed form") {
  // ps = -(Pp g_p - gamma_T sigma2_p) / (ln(alpha) gamma_T Omega_sp)
  const double g_p = 1.7;
  const double want = -(kP.Pp * g_p - kP.gamma_T * kP.sigma2_p) /
                      (std::log(kP.alpha) * kP.gamma_T * kP.Omega_sp);
  const PolicyOutput o = power_s2(kP, g_p);
  CHECK(o.ps_unclamped == doctest::Approx(want).epsilon(1e-14));
  CHECK(o.pt == clamp_power(want, kP.Pm));
  CHECK(power_s2(kP, kP.gamma_T * kP.sigma2_p / kP.Pp).blocked);
  CHECK_FALSE(power_s2(kP, 10.0 * kP.gamma_T).blocked);
}

TEST_CASE("scenario 3 headroom constant") {
  // Q = -(ln(1-alpha) Pp Omega_p / gamma_T + sigma2_p); at c2 = 0.1 the
  // Omega_p factors cancel, leaving -(10 ln 0.9 + 1).
  CHECK(scenario3_aux(kP).Q ==
        doctest::Approx(0.0536051565782627).epsilon(1e-12));

  const PolicyOutput o = power_s3(kP, 0.01);
  CHECK(o.ps_unclamped == doctest::Approx(scenario3_aux(kP).Q / 0.01).epsilon(1e-14));

  // Q <= 0 exactly when alpha <= 1 - e^{-c2}: the policy blocks for any gain.
  const double thresh = -std::expm1(-0.1);
  const SystemParams at = make_params_from_ratios(0.1, 0.1, thresh, 0.9);
  CHECK(power_s3(at, 0.5).blocked);
  CHECK(power_s3(at, 1e-9).blocked);
  const SystemParams above = make_params_from_ratios(0.1, 0.1, thresh + 1e-6, 0.9);
  CHECK_FALSE(power_s3(above, 0.5).blocked);
}

TEST_CASE("scenario 4 power is deterministic") {
  const PolicyOutput o = power_s4(kP);
  CHECK(o.ps_unclamped == doctest::Approx(0.16996954431122796).epsilon(1e-13));
  CHECK(o.pt == doctest::Approx(0.16996954431122796).epsilon(1e-13));
  CHECK_FALSE(o.blocked);

  const double thresh = -std::expm1(-0.1);
  CHECK(power_s4(make_params_from_ratios(0.1, 0.1, thresh, 0.9)).blocked);
  CHECK_FALSE(power_s4(make_params_from_ratios(0.1, 0.1, thresh + 1e-6, 0.9)).blocked);
}

TEST_CASE("scenario 5 constraint terms") {
  const Scenario5Terms t = make_scenario5_terms(kP, 0.5, 2.0, 0.3);
  const double om = 1.0 - 0.81;
  CHECK(t.lambda1 == doctest::Approx(2.0 * 0.81 * 2.0 / (kP.Omega_p * om)).epsilon(1e-14));
  CHECK(t.lambda2 == doctest::Approx(2.0 * 0.81 * 0.3 / (kP.Omega_sp * om)).epsilon(1e-14));
  CHECK(t.a_coef ==
        doctest::Approx(kP.gamma_T * 0.5 * kP.Omega_sp / (kP.Omega_p * kP.Pp)).epsilon(1e-14));
  // beta = 2 gamma_T sigma2_p / (Omega_p Pp (1-rho^2)) = 2 c2 / (1-rho^2)
  CHECK(t.beta == doctest::Approx(0.2 / om).epsilon(1e-13));

  SystemParams bad = kP;
  bad.rho = 1.0;
  CHECK_THROWS_AS(make_scenario5_terms(bad, 0.5, 2.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(make_scenario5_terms(kP, -0.5, 2.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(make_scenario5_terms(kP, 0.5, -2.0, 0.3), std::domain_error);
}

TEST_CASE("scenario 5 residual spot values") {
  auto resid = [&](double ps, double gp, double gsp) {
    return s5_constraint_residual(kP, make_scenario5_terms(kP, ps, gp, gsp));
  };
  const double gp = kP.Omega_p, gsp = 0.1 * kP.Omega_p;
  CHECK(resid(0.0, gp, gsp) == doctest::Approx(-0.085805946252).epsilon(1e-8));
  CHECK(resid(0.5, gp, gsp) == doctest::Approx(-0.082192975269).epsilon(1e-8));
  CHECK(resid(1.0, gp, gsp) == doctest::Approx(-0.078086441292).epsilon(1e-8));
  CHECK(resid(0.25, 2.0, 0.5) == doctest::Approx(-0.042453194025).epsilon(1e-8));

  // Strictly increasing in ps.
  CHECK(resid(0.0, gp, gsp) < resid(0.5, gp, gsp));
  CHECK(resid(0.5, gp, gsp) < resid(1.0, gp, gsp));
}

TEST_CASE("scenario 5 power roots against the reference solver") {
  SystemParams p10 = kP;
  p10.Pm = 10.0;
  CHECK(power_s5(p10, kP.Omega_p, 0.1 * kP.Omega_p).pt ==
        doctest::Approx(6.7119426091).epsilon(1e-7));
  CHECK(power_s5(p10, 1.581139, 0.158114).pt ==
        doctest::Approx(1.2178512268107324).epsilon(1e-9));
  CHECK(power_s5(p10, 3.0, 1.0).pt == doctest::Approx(2.2859313931).epsilon(1e-8));

  SUBCASE("cap binds") {
    const PolicyOutput o = power_s5(p10, 2.0 * kP.Omega_p, 0.1 * kP.Omega_p);
    CHECK(o.pt == 10.0);
    CHECK_FALSE(o.blocked);
  }
  SUBCASE("weak direct estimate blocks") {
    const PolicyOutput o = power_s5(kP, 0.01, 0.1);
    CHECK(o.pt == 0.0);
    CHECK(o.blocked);
  }
  SUBCASE("interior root satisfies the constraint to solver tolerance") {
    const PolicyOutput o = power_s5(p10, 1.581139, 0.158114);
    CHECK(o.pt > 0.0);
    CHECK(o.pt < p10.Pm);
    const double r =
        s5_constraint_residual(p10, make_scenario5_terms(p10, o.pt, 1.581139, 0.158114));
    CHECK(std::abs(r) < 1e-8);
  }
}

TEST_CASE("scenario 5 with rho = 0 ignores the estimates") {
  // Central case: the constraint reduces to 1 - e^{-beta/2}/(1+a) = alpha,
  // solvable in closed form for the power.
  SystemParams p = make_params_from_ratios(0.1, 0.1, 0.2, 0.0);
  const double beta = 2.0 * 0.1;  // 2 c2 / (1 - rho^2)
  const double a_star = std::exp(-0.5 * beta) / (1.0 - p.alpha) - 1.0;
  const double ps_star = a_star * p.Omega_p * p.Pp / (p.gamma_T * p.Omega_sp);
  REQUIRE(a_star > 0.0);
  const PolicyOutput o1 = power_s5(p, 0.123, 4.56);
  const PolicyOutput o2 = power_s5(p, 9.0, 0.01);
  CHECK(o1.pt == doctest::Approx(clamp_power(ps_star, p.Pm)).epsilon(1e-9));
  CHECK(o2.pt == doctest::Approx(o1.pt).epsilon(1e-12));
}

TEST_CASE("series form of the scenario 5 expectation matches quadrature") {
  // The quadrature path is the authority; the series must reproduce it on a
  // spread of noncentralities and scale factors.
  SystemParams p = kP;
  for (double l1 : {0.0, 2.0, 20.0}) {
    for (double l2 : {0.0, 0.5, 8.0}) {
      for (double a : {0.0, 0.3, 2.0}) {
        for (double b : {0.5, 9.5}) {
          Scenario5Terms t;
          t.lambda1 = l1;
          t.lambda2 = l2;
          t.a_coef = a;
          t.beta = b;
          const double lhs = s5_series_lhs(t);
          const double quad = s5_constraint_residual(p, t) + p.alpha;
          CAPTURE(l1);
          CAPTURE(l2);
          CAPTURE(a);
          CAPTURE(b);
          CHECK(lhs == doctest::Approx(quad).epsilon(5e-9));
        }
      }
    }
  }
}

TEST_CASE("series spot values in the central limit") {
  // rho = 0 closed form: 1 - e^{-beta/2} / (1 + a).
  auto closed = [](double a, double b) { return 1.0 - std::exp(-0.5 * b) / (1.0 + a); };
  Scenario5Terms t;
  t.a_coef = 0.0;
  t.beta = 1.0;
  CHECK(s5_series_lhs(t) == doctest::Approx(closed(0.0, 1.0)).epsilon(1e-12));
  CHECK(s5_series_lhs(t) == doctest::Approx(0.393469340287).epsilon(1e-11));
  t.a_coef = 0.5;
  t.beta = 2.0;
  CHECK(s5_series_lhs(t) == doctest::Approx(0.754747039219).epsilon(1e-11));
  t.a_coef = 2.0;
  t.beta = 5.0;
  CHECK(s5_series_lhs(t) == doctest::Approx(0.972638333792).epsilon(1e-11));
}

TEST_CASE("policy dispatch reads only the gains the scenario knows") {
  ChannelDraw d;
  d.g_p = 2.0 * kP.gamma_T;  // plenty of headroom for S1/S2
  d.g_sp = 0.5;
  d.g_p_hat = 0.01;  // would block S5
  d.g_sp_hat = 0.1;

  const PolicyOutput s1 = apply_policy(kP, ScenarioId::S1, d);
  CHECK(s1.pt == power_s1(kP, d.g_p, d.g_sp).pt);

  const PolicyOutput s4 = apply_policy(kP, ScenarioId::S4, d);
  CHECK(s4.pt == power_s4(kP).pt);

  const PolicyOutput s5 = apply_policy(kP, ScenarioId::S5, d);
  CHECK(s5.blocked);  // driven by the hats, not the true gains
}
