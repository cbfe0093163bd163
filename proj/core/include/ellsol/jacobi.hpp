#pragma once

#include "ellsol/invariants.hpp"

namespace ellsol {

// Squared modulus k^2 in [0, 1].
struct Modulus {
  double k_sq = 0.0;
};

// k^2 = (e2 - e3) / (e1 - e3) from three real roots.  Values within 1e-14
// outside [0, 1] are clamped; anything further is rejected.
Modulus modulus_from_roots(const CubicRoots& roots);

struct JacobiValues {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

// Jacobi sn (with cn and dn) via the descending Landen / arithmetic-geometric
// mean scale, amplitudes recovered by back-substitution.  Exact special cases
// at k^2 = 0 (circular) and k^2 = 1 (hyperbolic).
JacobiValues sn_cn_dn(double x, const Modulus& m);
double sn(double x, const Modulus& m);

// h1(w) = e3 + (e1 - e3) k^2 sn^2(w sqrt(e1 - e3)), the bounded branch.
double h1(double w, const CubicRoots& roots);
double h1_derivative(double w, const CubicRoots& roots);

// wp(w) = e3 + (e1 - e3) / sn^2(w sqrt(e1 - e3)), the unbounded branch;
// an independent route to wp when all roots are real.
double wp_via_sn(double w, const CubicRoots& roots);
double wp_via_sn_derivative(double w, const CubicRoots& roots);

// Fractional-linear map sending the unbounded branch onto the bounded one:
// h1 = (alpha wp + beta) / (gamma wp + delta).
struct MobiusCoeffs {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;

  double det() const { return alpha * delta - beta * gamma; }
};

MobiusCoeffs mobius_coefficients(const CubicRoots& roots);
double mobius_apply(const MobiusCoeffs& c, double t);

}  // namespace ellsol
