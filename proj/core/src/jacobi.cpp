#include "ellsol/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "ellsol/errors.hpp"

namespace ellsol {

namespace {

constexpr double kModulusStepTol = 1e-15;
constexpr double kModulusClampWindow = 1e-14;
constexpr int kMaxAgmIterations = 32;
constexpr double kSnPoleGuard = 1e-8;

// Three real roots in descending order, with the imaginary parts checked.
std::array<double, 3> sorted_real_roots(const CubicRoots& roots) {
  if (roots.real_count != 3) {
    throw NonPositiveDiscriminant("the bounded/unbounded bridge needs three real roots");
  }
  std::array<double, 3> r{};
  double scale = 1.0;
  for (int i = 0; i < 3; ++i) scale = std::max(scale, std::abs(roots.e[i]));
  for (int i = 0; i < 3; ++i) {
    if (std::abs(roots.e[i].imag()) > 1e-12 * scale) {
      throw NonPositiveDiscriminant("roots carry a non-negligible imaginary part");
    }
    r[i] = roots.e[i].real();
  }
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

}  // namespace

Modulus modulus_from_roots(const CubicRoots& roots) {
  const auto r = sorted_real_roots(roots);
  const double span = r[0] - r[2];
  double k_sq = 0.0;
  if (span > 0.0) k_sq = (r[1] - r[2]) / span;
  if (k_sq < 0.0) {
    if (k_sq < -kModulusClampWindow) throw DomainError("modulus below the unit interval");
    k_sq = 0.0;
  } else if (k_sq > 1.0) {
    if (k_sq > 1.0 + kModulusClampWindow) throw DomainError("modulus above the unit interval");
    k_sq = 1.0;
  }
  return Modulus{k_sq};
}

// Descending Landen scale: run the arithmetic-geometric mean of 1 and k',
// then recover the amplitude by back-substitution,
//   phi_{n-1} = (phi_n + asin((c_n / a_n) sin phi_n)) / 2.
JacobiValues sn_cn_dn(double x, const Modulus& m) {
  double k_sq = m.k_sq;
  // Same courtesy window as modulus_from_roots: a modulus computed from
  // roots can land a few ulps outside the interval.
  if (k_sq < 0.0) {
    if (k_sq < -kModulusClampWindow) throw DomainError("k^2 outside [0, 1]");
    k_sq = 0.0;
  } else if (k_sq > 1.0) {
    if (k_sq > 1.0 + kModulusClampWindow) throw DomainError("k^2 outside [0, 1]");
    k_sq = 1.0;
  }

  JacobiValues out;
  if (k_sq == 0.0) {
    out.sn = std::sin(x);
    out.cn = std::cos(x);
    out.dn = 1.0;
    return out;
  }
  if (k_sq == 1.0) {
    out.sn = std::tanh(x);
    out.cn = 1.0 / std::cosh(x);
    out.dn = out.cn;
    return out;
  }

  double a[kMaxAgmIterations + 1];
  double c[kMaxAgmIterations + 1];
  a[0] = 1.0;
  c[0] = std::sqrt(k_sq);
  double b = std::sqrt(1.0 - k_sq);
  int n = 0;
  while (c[n] > kModulusStepTol) {
    if (n == kMaxAgmIterations) {
      throw ConvergenceFailure("arithmetic-geometric mean failed to contract");
    }
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }

  double phi = std::ldexp(a[n] * x, n);
  for (int i = n; i > 0; --i) {
    const double s = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }

  out.sn = std::sin(phi);
  out.cn = std::cos(phi);
  // The textbook recovery dn = cn / cos(phi_1 - phi_0) is 0/0 at the quarter
  // period; the defining relation is stable everywhere on the real line.
  out.dn = std::sqrt(1.0 - k_sq * out.sn * out.sn);
  return out;
}

double sn(double x, const Modulus& m) { return sn_cn_dn(x, m).sn; }

namespace {

struct BridgeFrame {
  std::array<double, 3> e;
  double span;   // e1 - e3
  double scale;  // sqrt(e1 - e3)
  Modulus m;
  JacobiValues jv;
};

BridgeFrame bridge_eval(double w, const CubicRoots& roots) {
  BridgeFrame f;
  f.e = sorted_real_roots(roots);
  f.span = f.e[0] - f.e[2];
  if (!(f.span > 0.0)) {
    throw DomainError("coincident extreme roots leave the bridge undefined");
  }
  f.scale = std::sqrt(f.span);
  f.m = modulus_from_roots(roots);
  f.jv = sn_cn_dn(w * f.scale, f.m);
  return f;
}

}  // namespace

double h1(double w, const CubicRoots& roots) {
  const auto f = bridge_eval(w, roots);
  return f.e[2] + f.span * f.m.k_sq * f.jv.sn * f.jv.sn;
}

double h1_derivative(double w, const CubicRoots& roots) {
  const auto f = bridge_eval(w, roots);
  return 2.0 * f.span * f.m.k_sq * f.scale * f.jv.sn * f.jv.cn * f.jv.dn;
}

double wp_via_sn(double w, const CubicRoots& roots) {
  const auto f = bridge_eval(w, roots);
  if (std::abs(f.jv.sn) < kSnPoleGuard) {
    throw PoleProximity("sn vanishes at the requested argument", w, std::abs(f.jv.sn));
  }
  return f.e[2] + f.span / (f.jv.sn * f.jv.sn);
}

double wp_via_sn_derivative(double w, const CubicRoots& roots) {
  const auto f = bridge_eval(w, roots);
  if (std::abs(f.jv.sn) < kSnPoleGuard) {
    throw PoleProximity("sn vanishes at the requested argument", w, std::abs(f.jv.sn));
  }
  const double sn3 = f.jv.sn * f.jv.sn * f.jv.sn;
  return -2.0 * f.span * f.scale * f.jv.cn * f.jv.dn / sn3;
}

MobiusCoeffs mobius_coefficients(const CubicRoots& roots) {
  const auto r = sorted_real_roots(roots);
  const double e1 = r[0];
  const double e2 = r[1];
  MobiusCoeffs c;
  c.alpha = -e1 - e2;
  c.beta = e1 * e1 + e2 * e2 + 3.0 * e1 * e2;
  c.gamma = 1.0;
  c.delta = e1 + e2;
  const double scale = std::max({1.0, std::abs(c.alpha * c.delta), std::abs(c.beta)});
  if (std::abs(c.det()) < 1e-12 * scale) {
    throw DomainError("fractional-linear map is singular for these roots");
  }
  return c;
}

double mobius_apply(const MobiusCoeffs& c, double t) {
  const double den = c.gamma * t + c.delta;
  const double scale = std::max(1.0, std::abs(c.gamma * t)) ;
  if (std::abs(den) < 1e-14 * scale) {
    throw DomainError("fractional-linear map evaluated at its pole");
  }
  return (c.alpha * t + c.beta) / den;
}

}  // namespace ellsol
