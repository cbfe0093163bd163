#include "ellsol/series.hpp"

#include <cmath>
#include <limits>

namespace ellsol {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

SampleSeries sample_series(const Branch& branch, const GridSpec& grid,
                           const SeriesOptions& opt) {
  const auto xs = grid.points();
  SampleSeries out;
  out.x = xs;
  out.z.assign(xs.size(), kNan);
  out.pole.assign(xs.size(), 0);
  if (opt.with_derivative) out.u.assign(xs.size(), kNan);

  for (size_t i = 0; i < xs.size(); ++i) {
    const BranchEval e = branch(xs[i]);
    const bool blown =
        !e.z.finite() || e.pole || std::abs(e.z.value()) > opt.value_clip;
    if (blown) {
      out.pole[i] = 1;
      continue;
    }
    out.z[i] = e.z.value();
    if (opt.with_derivative) out.u[i] = e.z.d1();
  }

  // Widen each detected pole so plots do not draw the adjacent blow-up.
  if (grid.pole_mask_radius > 0.0 && xs.size() > 1) {
    const double step = xs[1] - xs[0];
    // floor with a nudge: radius == k*step must give k, not k+1, despite
    // rounding in step
    const int halo = static_cast<int>(std::floor(grid.pole_mask_radius / step + 1e-9));
    std::vector<size_t> centers;
    for (size_t i = 0; i < xs.size(); ++i) {
      if (out.pole[i]) centers.push_back(i);
    }
    for (size_t c : centers) {
      const size_t lo = c >= static_cast<size_t>(halo) ? c - static_cast<size_t>(halo) : 0;
      const size_t hi = std::min(xs.size() - 1, c + static_cast<size_t>(halo));
      for (size_t i = lo; i <= hi; ++i) {
        out.pole[i] = 1;
        out.z[i] = kNan;
        if (opt.with_derivative) out.u[i] = kNan;
      }
    }
  }

  return out;
}

SampleSeries sample_series(const SolitonSolution& sol, const GridSpec& grid,
                           const SeriesOptions& opt) {
  return sample_series(sol.branch(), grid, opt);
}

}  // namespace ellsol
