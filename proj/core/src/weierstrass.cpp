#include "ellsol/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellsol/errors.hpp"

namespace ellsol {

namespace {
constexpr int kMaxSplitRetries = 3;
}  // namespace

Weierstrass::Weierstrass(const Invariants& inv, const EvalConfig& cfg)
    : inv_(inv), cfg_(cfg), roots_(roots_from_invariants(inv)) {
  if (cfg_.series_terms < 2) throw DomainError("series_terms must be at least 2");
  if (!(cfg_.pole_exclusion_radius > 0.0)) {
    throw DomainError("pole_exclusion_radius must be positive");
  }

  // Laurent coefficients: wp(t) = t^-2 + sum_{k>=2} c_k t^{2k-2} with
  // c_2 = g2/20, c_3 = g3/28 and
  // c_k = 3 / ((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m} for k >= 4.
  const int kmax = cfg_.series_terms + 1;
  c_.assign(static_cast<size_t>(kmax) + 1, 0.0);
  c_[2] = inv_.g2 / 20.0;
  c_[3] = inv_.g3 / 28.0;
  for (int k = 4; k <= kmax; ++k) {
    double s = 0.0;
    for (int m = 2; m <= k - 2; ++m) s += c_[m] * c_[k - m];
    c_[k] = 3.0 * s / ((2.0 * k + 1.0) * (k - 3.0));
  }

  // Series arguments stay below half of the shortest root-induced length
  // scale; for invariants of order one this is the flat 0.5 radius.
  double emax = 1.0;
  for (const auto& e : roots_.e) emax = std::max(emax, std::abs(e));
  series_radius_ = 0.5 / std::sqrt(emax);
}

Weierstrass::Reduced Weierstrass::series_eval(double t) const {
  const double t2 = t * t;
  const int kmax = cfg_.series_terms + 1;

  double sum_p = 0.0;   // sum c_k t^{2k-2}
  double sum_dp = 0.0;  // sum (2k-2) c_k t^{2k-3}
  double sum_z = 0.0;   // sum c_k t^{2k-1} / (2k-1)
  double pw = t2;       // t^{2k-2}, starting at k = 2
  // Tail estimate over a window of three: special invariants (g3 = 0, or
  // g2 = 0) zero out whole residue classes of coefficients, so a single
  // trailing term can be exactly zero while the series is badly truncated.
  // Any three consecutive k contain a nonzero representative.
  double tail = 0.0;
  for (int k = 2; k <= kmax; ++k) {
    const double term = c_[k] * pw;
    sum_p += term;
    sum_dp += (2.0 * k - 2.0) * term / t;
    sum_z += term * t / (2.0 * k - 1.0);
    if (k > kmax - 3) tail = std::max(tail, std::abs(term));
    pw *= t2;
  }

  const double principal = 1.0 / t2;
  const double p = principal + sum_p;
  if (tail > cfg_.series_guard_ratio * std::abs(p)) {
    throw ConvergenceFailure("Laurent tail above guard at reduced argument");
  }

  Reduced r;
  r.p = p;
  r.dp = -2.0 / (t2 * t) + sum_dp;
  r.z = 1.0 / t - sum_z;
  return r;
}

// One duplication ladder: wp, wp' and zeta from the reduced argument back to
// the full one.  A vanishing wp' at an intermediate point is not guarded:
// q = wp''/wp' blowing up is the correct limit there (the doubled point is a
// lattice pole) and stays finite in doubles until absurdly close.  Returns
// false only when an intermediate overflows outright, in which case the
// caller re-splits with one more halving.
bool Weierstrass::duplicate(Reduced& r, int steps) const {
  const double g2 = inv_.g2;
  for (int i = 0; i < steps; ++i) {
    const double ddp = 6.0 * r.p * r.p - 0.5 * g2;
    const double q = ddp / r.dp;
    const double p2 = 0.25 * q * q - 2.0 * r.p;
    const double dp2 = 0.25 * q * (12.0 * r.p - q * q) - r.dp;
    const double z2 = 2.0 * r.z + 0.5 * q;
    r.p = p2;
    r.dp = dp2;
    r.z = z2;
    if (!std::isfinite(r.p) || !std::isfinite(r.dp)) return false;
  }
  return true;
}

Weierstrass::State Weierstrass::eval_positive(double x) const {
  int n = 0;
  if (x > series_radius_) {
    n = static_cast<int>(std::ceil(std::log2(x / series_radius_)));
  }

  Reduced r{};
  bool done = false;
  for (int attempt = 0; attempt <= kMaxSplitRetries && !done; ++attempt) {
    const double t = std::ldexp(x, -(n + attempt));
    r = series_eval(t);
    done = duplicate(r, n + attempt);
  }
  if (!done) {
    throw ConvergenceFailure("duplication stalled near a half period");
  }

  State s;
  s.p = r.p;
  s.dp = r.dp;
  s.ddp = 6.0 * r.p * r.p - 0.5 * inv_.g2;
  s.z = r.z;

  // Nearest detected pole: the origin always, a lattice translate whenever
  // wp is beyond the empirical flag threshold.
  s.prox = x;
  if (s.p > cfg_.pole_flag_threshold) {
    s.prox = std::min(s.prox, 1.0 / std::sqrt(s.p));
  }
  return s;
}

Weierstrass::State Weierstrass::eval(double x) const {
  if (!std::isfinite(x)) throw DomainError("argument must be finite");
  const double ax = std::abs(x);
  if (ax > cfg_.max_abs_argument) {
    throw DomainError("argument beyond the supported cap");
  }
  if (ax < cfg_.pole_exclusion_radius) {
    throw PoleProximity("argument inside the pole exclusion radius", x, ax);
  }

  // Evaluate on the positive axis and restore parity afterwards: wp and wp''
  // are even, wp' and zeta odd.  This keeps the symmetry exact in bits.
  State s = eval_positive(ax);
  if (s.prox < cfg_.pole_exclusion_radius) {
    throw PoleProximity("argument inside the exclusion radius of a lattice translate",
                        x, s.prox);
  }
  if (x < 0.0) {
    s.dp = -s.dp;
    s.z = -s.z;
  }
  return s;
}

EvalResult Weierstrass::wp_family(double x) const {
  const State s = eval(x);
  EvalResult r;
  r.value = s.p;
  r.derivative = s.dp;
  r.second = s.ddp;
  r.pole_proximity = s.prox;
  return r;
}

double Weierstrass::wp(double x) const { return eval(x).p; }

double Weierstrass::zeta(double x) const { return eval(x).z; }

}  // namespace ellsol
