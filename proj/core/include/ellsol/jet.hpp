#pragma once

#include <array>
#include <cmath>

namespace ellsol {

// Truncated Taylor expansion of a real function about a point: a value and
// four derivatives stored as series coefficients, coef[k] = f^(k)(x0)/k!.
// Sums, products and quotients follow truncated power series rules, which is
// how analytic derivatives are carried through superposition chains without
// finite differencing.
struct Jet {
  static constexpr int kOrder = 4;

  std::array<double, kOrder + 1> coef{};

  static Jet constant(double c) {
    Jet j;
    j.coef[0] = c;
    return j;
  }

  static Jet from_derivatives(double f, double f1, double f2, double f3, double f4) {
    Jet j;
    j.coef = {f, f1, f2 / 2.0, f3 / 6.0, f4 / 24.0};
    return j;
  }

  double value() const { return coef[0]; }
  double d1() const { return coef[1]; }
  double d2() const { return 2.0 * coef[2]; }
  double d3() const { return 6.0 * coef[3]; }
  double d4() const { return 24.0 * coef[4]; }

  // n-th derivative, n in [0, kOrder]
  double derivative(int n) const {
    static constexpr double factorial[] = {1.0, 1.0, 2.0, 6.0, 24.0};
    return coef[static_cast<size_t>(n)] * factorial[n];
  }

  bool finite() const {
    for (double c : coef) {
      if (!std::isfinite(c)) return false;
    }
    return true;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.coef[k] = a.coef[k] + b.coef[k];
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.coef[k] = a.coef[k] - b.coef[k];
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.coef[k] = -a.coef[k];
  return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) s += a.coef[i] * b.coef[k - i];
    r.coef[k] = s;
  }
  return r;
}

// Truncated series division: c0 = a0/b0, c_k = (a_k - sum b_i c_{k-i}) / b0.
inline Jet operator/(const Jet& a, const Jet& b) {
  Jet r;
  r.coef[0] = a.coef[0] / b.coef[0];
  for (int k = 1; k <= Jet::kOrder; ++k) {
    double s = a.coef[k];
    for (int i = 1; i <= k; ++i) s -= b.coef[i] * r.coef[k - i];
    r.coef[k] = s / b.coef[0];
  }
  return r;
}

inline Jet operator+(const Jet& a, double s) {
  Jet r = a;
  r.coef[0] += s;
  return r;
}
inline Jet operator+(double s, const Jet& a) { return a + s; }

inline Jet operator-(const Jet& a, double s) { return a + (-s); }
inline Jet operator-(double s, const Jet& a) { return (-a) + s; }

inline Jet operator*(const Jet& a, double s) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.coef[k] = a.coef[k] * s;
  return r;
}
inline Jet operator*(double s, const Jet& a) { return a * s; }

inline Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
inline Jet operator/(double s, const Jet& a) { return Jet::constant(s) / a; }

}  // namespace ellsol
