#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// CSV persistence for experiment results and the key-value manifest that
// records everything needed to re-run a sweep identically.

namespace sucap {

inline constexpr int kCsvSchemaVersion = 1;
inline constexpr const char* kCsvHeader =
    "scenario,c1,c2,alpha,rho,kind,x,value,method,err,seed";
inline constexpr const char* kToolVersion = "1.0.0";

struct ResultRow {
  std::string scenario;   // S1..S5
  double c1 = 0.0;
  double c2 = 0.0;
  double alpha = 0.0;
  double rho = 0.0;
  std::string kind;       // cdf_capacity, blocking, mean_capacity, ks_capacity, ...
  double x = 0.0;         // abscissa; 0 for scalar quantities
  double value = 0.0;
  std::string method;     // analytic | mc
  double err = 0.0;       // quadrature bound or MC standard error; 0 when exact
  std::uint64_t seed = 0; // 0 for analytic rows
};

// Shortest round-trip decimal representation, stable across runs.
std::string format_double(double v);

std::string csv_line(const ResultRow& r);

// Writes header plus rows, creating parent directories as needed.  Refuses
// to overwrite a file whose first line is not the current schema header.
void write_csv(const std::string& path, const std::vector<ResultRow>& rows);

// Plain "key=value" lines in the given order.
void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace sucap
