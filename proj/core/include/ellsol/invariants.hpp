#pragma once

#include <array>
#include <complex>

namespace ellsol {

// Invariant pair (g2, g3) of the cubic 4 t^3 - g2 t - g3 together with its
// discriminant g2^3 - 27 g3^2.  The sign of the discriminant classifies the
// root pattern: positive means three distinct real roots, negative one real
// root and a conjugate pair, zero a repeated real root.
struct Invariants {
  double g2 = 0.0;
  double g3 = 0.0;
  double discriminant = 0.0;

  Invariants() = default;
  Invariants(double g2_in, double g3_in);

  bool all_real_roots() const { return discriminant >= 0.0; }
};

// Roots e1, e2, e3 of 4 t^3 - g2 t - g3 = 0.  Real roots come first in
// descending order; a conjugate pair, when present, fills the last two slots
// with the positive imaginary part first.
struct CubicRoots {
  std::array<std::complex<double>, 3> e{};
  int real_count = 0;  // 3 when the discriminant is >= 0, otherwise 1

  // Real parts of all three roots, valid only when real_count == 3.
  std::array<double, 3> real() const;
};

CubicRoots roots_from_invariants(const Invariants& inv);

// Vieta inverse: g2 = -4 (e1 e2 + e2 e3 + e3 e1), g3 = 4 e1 e2 e3.
// Requires the roots to sum to zero within 1e-10 of their scale.
Invariants invariants_from_roots(const CubicRoots& roots);

}  // namespace ellsol
