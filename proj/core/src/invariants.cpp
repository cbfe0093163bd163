#include "ellsol/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "ellsol/errors.hpp"

namespace ellsol {

Invariants::Invariants(double g2_in, double g3_in) : g2(g2_in), g3(g3_in) {
  if (!std::isfinite(g2) || !std::isfinite(g3)) {
    throw DomainError("invariants must be finite");
  }
  discriminant = g2 * g2 * g2 - 27.0 * g3 * g3;
}

std::array<double, 3> CubicRoots::real() const {
  if (real_count != 3) {
    throw NonPositiveDiscriminant("all three roots must be real");
  }
  return {e[0].real(), e[1].real(), e[2].real()};
}

// Roots of 4 t^3 - g2 t - g3 = 0, i.e. the depressed cubic t^3 + p t + q
// with p = -g2/4 and q = -g3/4.  Three real roots come from the
// trigonometric form, a single real root from Cardano with cbrt.
CubicRoots roots_from_invariants(const Invariants& inv) {
  const double p = -inv.g2 / 4.0;
  const double q = -inv.g3 / 4.0;

  CubicRoots out;

  if (inv.g2 == 0.0 && inv.g3 == 0.0) {
    out.real_count = 3;
    return out;
  }

  if (inv.discriminant >= 0.0) {
    // t_k = 2 sqrt(-p/3) cos((acos(3q/(2p) sqrt(-3/p)) - 2 pi k) / 3)
    out.real_count = 3;
    const double m = std::sqrt(-p / 3.0);
    double arg = 0.0;
    if (m > 0.0) arg = 3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p);
    arg = std::clamp(arg, -1.0, 1.0);
    const double phi = std::acos(arg);
    std::array<double, 3> r{};
    for (int k = 0; k < 3; ++k) {
      r[k] = 2.0 * m * std::cos((phi - 2.0 * M_PI * k) / 3.0);
    }
    std::sort(r.begin(), r.end(), std::greater<>());
    for (int k = 0; k < 3; ++k) out.e[k] = r[k];
    return out;
  }

  // One real root: t = u + v with u^3, v^3 the Cardano pair.
  const double half_q = q / 2.0;
  const double d = half_q * half_q + p * p * p / 27.0;  // > 0 here
  const double s = std::sqrt(d);
  const double u = std::cbrt(-half_q + s);
  const double v = std::cbrt(-half_q - s);
  const double t0 = u + v;
  // Deflate: t^2 + t0 t + (t0^2 + p) has the conjugate pair.
  const double re = -t0 / 2.0;
  const double disc2 = t0 * t0 + p - re * re;  // = 3 t0^2/4 + p
  const double im = std::sqrt(std::max(disc2, 0.0));
  out.real_count = 1;
  out.e[0] = t0;
  out.e[1] = {re, im};
  out.e[2] = {re, -im};
  return out;
}

Invariants invariants_from_roots(const CubicRoots& roots) {
  const auto& e = roots.e;
  const std::complex<double> sum = e[0] + e[1] + e[2];
  double scale = 1.0;
  for (const auto& r : e) scale = std::max(scale, std::abs(r));
  if (std::abs(sum) > 1e-10 * scale) {
    throw DomainError("roots must sum to zero");
  }
  const std::complex<double> sym2 = e[0] * e[1] + e[1] * e[2] + e[2] * e[0];
  const std::complex<double> sym3 = e[0] * e[1] * e[2];
  return Invariants(-4.0 * sym2.real(), 4.0 * sym3.real());
}

}  // namespace ellsol
