#pragma once

#include <string>

#include "ellsol/series.hpp"

namespace ellsol::cli {

// Columns: x,z[,u],pole. Pole rows keep x, leave the value fields empty and
// set pole=1, so downstream plotting can break the line there.
void write_csv(const std::string& path, const SampleSeries& series);

}  // namespace ellsol::cli
