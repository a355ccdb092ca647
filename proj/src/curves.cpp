#include "sucap/curves.hpp"

namespace sucap {

const char* curve_kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::cdf_gamma: return "cdf_gamma";
    case CurveKind::cdf_gamma_I: return "cdf_gamma_I";
    case CurveKind::pdf_gamma_I: return "pdf_gamma_I";
    case CurveKind::cdf_capacity: return "cdf_capacity";
    case CurveKind::pdf_capacity: return "pdf_capacity";
    case CurveKind::cdf_pt: return "cdf_pt";
  }
  return "?";
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n <= 0) return {};
  if (n == 1) return {lo};
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return g;
}

std::vector<double> default_capacity_grid() { return linspace(0.0, 8.0, 161); }

}  // namespace sucap
