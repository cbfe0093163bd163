#include "csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace ellsol::cli {

void write_csv(const std::string& path, const SampleSeries& series) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot write " + path);
  const bool with_u = series.has_u();
  std::fprintf(f, with_u ? "x,z,u,pole\n" : "x,z,pole\n");
  for (size_t i = 0; i < series.size(); ++i) {
    if (series.pole[i]) {
      std::fprintf(f, with_u ? "%.17g,,,1\n" : "%.17g,,1\n", series.x[i]);
      continue;
    }
    if (with_u) {
      std::fprintf(f, "%.17g,%.17g,%.17g,0\n", series.x[i], series.z[i], series.u[i]);
    } else {
      std::fprintf(f, "%.17g,%.17g,0\n", series.x[i], series.z[i]);
    }
  }
  std::fclose(f);
}

}  // namespace ellsol::cli
