#pragma once

#include <string>

#include "ellsol/series.hpp"

namespace ellsol::cli {

// Single-panel line plot of z against x. The polyline breaks at pole rows.
// The y window is the 2..98 percentile band of the finite samples so a
// near-pole blow-up cannot flatten the rest of the curve.
void write_svg(const std::string& path, const SampleSeries& series,
               const std::string& title);

}  // namespace ellsol::cli
