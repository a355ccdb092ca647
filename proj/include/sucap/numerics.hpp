#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

// Adaptive Gauss-Kronrod quadrature (finite and semi-infinite) and bracketed
// root finding.  The 7-15 pair and the error estimate follow QUADPACK's qk15.

namespace sucap {

struct QuadSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated bound on |value - integral|
};

struct RootSpec {
  double abs_tol = 1e-10;
  int max_iterations = 200;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, double best, double err)
      : std::runtime_error(msg), best_estimate(best), achieved_error(err) {}
  double best_estimate;
  double achieved_error;
};

class BracketNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double infinity = std::numeric_limits<double>::infinity();

namespace detail {

// 15-point Kronrod abscissae (positive half) and weights; 7-point Gauss
// weights for the embedded rule.  Values from QUADPACK dqk15.
inline constexpr double xgk15[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double wgk15[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double wg7[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

template <class F>
PanelEstimate gk15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  const double fc = f(c);
  double resk = wgk15[7] * fc;
  double resg = wg7[3] * fc;
  double resabs = wgk15[7] * std::fabs(fc);
  double f1v[7];
  double f2v[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk15[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    f1v[j] = f1;
    f2v[j] = f2;
    resk += wgk15[j] * (f1 + f2);
    resabs += wgk15[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) resg += wg7[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = wgk15[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += wgk15[j] * (std::fabs(f1v[j] - reskh) + std::fabs(f2v[j] - reskh));
  }

  const double value = resk * h;
  double err = std::fabs((resk - resg) * h);
  resasc *= std::fabs(h);
  resabs *= std::fabs(h);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / eps50) err = std::max(eps50 * resabs, err);
  return {value, err};
}

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
QuadResult integrate_finite(F&& f, double lo, double hi, const QuadSpec& spec) {
  std::priority_queue<Segment> segs;
  PanelEstimate whole = gk15(f, lo, hi);
  segs.push({lo, hi, whole.value, whole.error});
  double total = whole.value;
  double total_err = whole.error;
  for (int n = 0; n < spec.max_subdivisions; ++n) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
    if (total_err <= tol) return {total, total_err};
    Segment worst = segs.top();
    segs.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval exhausted at machine precision; keep its estimate
      total_err = std::max(total_err - worst.error, 0.0);
      continue;
    }
    PanelEstimate left = gk15(f, worst.a, mid);
    PanelEstimate right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    segs.push({worst.a, mid, left.value, left.error});
    segs.push({mid, worst.b, right.value, right.error});
  }
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
  if (total_err <= tol) return {total, total_err};
  throw QuadratureError("integrate: subdivision limit reached", total, total_err);
}

}  // namespace detail

// Integrate f over (lo, hi); hi may be sucap::infinity, in which case the tail
// is mapped to (0, 1] by t = 1/(1 + v).  Panel nodes are interior, so
// integrable endpoint behavior (x log x type) is never evaluated at the
// endpoint itself.
template <class F>
QuadResult integrate(F&& f, double lo, double hi, const QuadSpec& spec = {}) {
  if (std::isnan(lo) || std::isnan(hi) || std::isinf(lo)) {
    throw std::invalid_argument("integrate: bad interval");
  }
  if (hi == infinity) {
    auto g = [&f, lo](double t) {
      const double v = (1.0 - t) / t;
      return f(lo + v) / (t * t);
    };
    return detail::integrate_finite(g, 0.0, 1.0, spec);
  }
  return detail::integrate_finite(f, lo, hi, spec);
}

// Brent's method with bisection fallback; requires f(lo) and f(hi) to bracket.
template <class F>
double find_root(F&& f, double lo, double hi, const RootSpec& spec = {}) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw std::invalid_argument("find_root: endpoints do not bracket a root");
  }
  double c = a, fc = fa;
  double d = b - a, e = d;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < spec.max_iterations; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * spec.abs_tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::fabs(d) > tol1) {
      b += d;
    } else {
      b += (xm > 0.0 ? tol1 : -tol1);
    }
    fb = f(b);
  }
  throw std::runtime_error("find_root: iteration limit reached");
}

// Geometric expansion from x0 until f changes sign.  The search moves in the
// direction where |f| shrinks; caps bound the expansion on both sides.
template <class F>
Bracket auto_bracket(F&& f, double x0, double grow = 2.0, double lo_cap = 1e-300,
                     double hi_cap = 1e300, int max_steps = 200) {
  if (!(x0 > 0.0) || !(grow > 1.0)) {
    throw std::invalid_argument("auto_bracket: requires x0 > 0 and grow > 1");
  }
  const double f0 = f(x0);
  if (f0 == 0.0) return {x0, x0};
  const double x1 = std::min(x0 * grow, hi_cap);
  const double f1 = f(x1);
  if ((f0 > 0.0) != (f1 > 0.0)) return {x0, x1};
  if (std::fabs(f1) < std::fabs(f0)) {
    double xa = x1, fa = f1;
    for (int i = 0; i < max_steps && xa < hi_cap; ++i) {
      const double xb = std::min(xa * grow, hi_cap);
      const double fb = f(xb);
      if ((fa > 0.0) != (fb > 0.0)) return {xa, xb};
      xa = xb;
      fa = fb;
    }
  } else {
    double xa = x0, fa = f0;
    for (int i = 0; i < max_steps && xa > lo_cap; ++i) {
      const double xb = std::max(xa / grow, lo_cap);
      const double fb = f(xb);
      if ((fa > 0.0) != (fb > 0.0)) return {xb, xa};
      xa = xb;
      fa = fb;
    }
  }
  throw BracketNotFound("auto_bracket: no sign change before cap");
}

}  // namespace sucap
