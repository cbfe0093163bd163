#pragma once

#include <vector>

#include "ellsol/soliton.hpp"
#include "ellsol/verifier.hpp"

namespace ellsol {

// Columnar samples of a solution over a grid.  Pole rows keep their x but
// carry NaN in the value columns and true in the pole mask.
struct SampleSeries {
  std::vector<double> x;
  std::vector<double> z;
  std::vector<double> u;  // empty unless the derivative was requested
  std::vector<bool> pole;

  bool has_u() const { return !u.empty(); }
  size_t size() const { return x.size(); }
};

struct SeriesOptions {
  bool with_derivative = false;
  // |z| beyond this is reported as a pole sample rather than a value.
  double value_clip = 1e6;
};

// Samples a branch over the grid.  A row is marked as a pole when the value
// is non-finite, exceeds the clip, or sits essentially on a superposition
// denominator zero; rows within pole_mask_radius of a detected pole are
// masked along with it.  Seed singularities that the composed solution
// cancels are filled in, not masked.
SampleSeries sample_series(const Branch& z, const GridSpec& grid,
                           const SeriesOptions& opt = {});
SampleSeries sample_series(const SolitonSolution& sol, const GridSpec& grid,
                           const SeriesOptions& opt = {});

}  // namespace ellsol
