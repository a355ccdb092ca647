#pragma once

#include <vector>

#include "sucap/model.hpp"

namespace sucap {

enum class CurveKind {
  cdf_gamma,     // CDF of the received secondary power gamma = pt g_s
  cdf_gamma_I,   // CDF of the secondary SINR
  pdf_gamma_I,   // PDF of the secondary SINR
  cdf_capacity,  // CDF of log2(1 + SINR)
  pdf_capacity,  // PDF of log2(1 + SINR)
  cdf_pt,        // CDF of the transmitted power (empirical only)
};

const char* curve_kind_name(CurveKind k);

struct DistributionCurve {
  std::vector<double> abscissae;
  std::vector<double> values;
  CurveKind kind = CurveKind::cdf_capacity;
  ScenarioId scenario = ScenarioId::S1;
  double quad_error = 0.0;  // worst quadrature error across points; 0 if exact
};

// Capacity grid used for CDF comparisons: 161 points on [0, 8] bits/s/Hz.
std::vector<double> default_capacity_grid();

// n equally spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace sucap
