#include "sucap/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace sucap {

std::string format_double(double v) {
  // Shortest of the precisions that round-trips exactly.
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) break;
  }
  return buf;
}

std::string csv_line(const ResultRow& r) {
  std::string out;
  out.reserve(128);
  out += r.scenario;
  out += ',';
  out += format_double(r.c1);
  out += ',';
  out += format_double(r.c2);
  out += ',';
  out += format_double(r.alpha);
  out += ',';
  out += format_double(r.rho);
  out += ',';
  out += r.kind;
  out += ',';
  out += format_double(r.x);
  out += ',';
  out += format_double(r.value);
  out += ',';
  out += r.method;
  out += ',';
  out += format_double(r.err);
  out += ',';
  out += std::to_string(r.seed);
  return out;
}

void write_csv(const std::string& path, const std::vector<ResultRow>& rows) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());

  if (fs::exists(p)) {
    std::ifstream existing(p);
    std::string first;
    std::getline(existing, first);
    if (!first.empty() && first != kCsvHeader) {
      throw std::runtime_error("refusing to overwrite " + path +
                               ": existing header does not match schema v" +
                               std::to_string(kCsvSchemaVersion));
    }
  }

  std::ofstream out(p, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << csv_line(r) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& [k, v] : entries) out << k << '=' << v << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace sucap
