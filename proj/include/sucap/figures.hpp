#pragma once

#include <cstdint>
#include <string>

// Reproduces the data series behind the reference result plots.  Each bundle
// is one CSV (ResultRow schema) plus a manifest with the exact settings.
//
//   fig2  capacity CDFs, S1-S4 analytic + S5 MC, c1 = 0.1,  c2 = 0.1
//   fig3  same at c1 = 0.01
//   fig4  same at c1 = 0.9, plus S3/S4 variants at alpha = 0.096
//   fig5  transmit-power CDFs, S1 and S2, c1 in {0.1, 0.9}, c2 = 0.1
//   fig6  capacity CDFs, S1 and S2, c1 = 0.01, c2 in {0.5, 0.9}
//   fig7  Pr(C <= 0.5) vs c1, S1 and S2, c2 in {0.5, 0.9}
//   fig8  blocking vs c2: S1/S2 closed form, S5 at rho in {0.9, 0.99}
//         and alpha in {0.1, 0.3}

namespace sucap {

struct FigureResult {
  std::string csv_path;
  std::string manifest_path;
  std::size_t row_count = 0;
};

bool figure_id_known(const std::string& id);

// Throws std::invalid_argument for an unknown id.  samples/seed affect only
// the Monte Carlo series (S5 capacity curves, transmit-power curves).
FigureResult reproduce_figure(const std::string& id, const std::string& out_dir,
                              std::uint64_t samples = 1000000,
                              std::uint64_t seed = 20260819);

}  // namespace sucap
