#pragma once

#include <vector>

#include "ellsol/invariants.hpp"

namespace ellsol {

// Knobs for the series-plus-duplication evaluator.  Defaults are deliberately
// conservative; they hold the Laurent tail far below double rounding for any
// argument the duplication ladder can reach.
struct EvalConfig {
  // No evaluation closer than this to a pole (the origin or a detected
  // lattice translate).
  double pole_exclusion_radius = 1e-4;
  // |wp| beyond this value is treated as sitting on a lattice translate.
  double pole_flag_threshold = 1e10;
  // Arguments are not reduced by periods, so cap them outright.
  double max_abs_argument = 50.0;
  // Number of Laurent coefficients c_2 .. c_{series_terms+1}.
  int series_terms = 24;
  // The last series term must stay below this fraction of the partial sum.
  double series_guard_ratio = 1e-18;
};

struct EvalResult {
  double value = 0.0;       // wp(x)
  double derivative = 0.0;  // wp'(x)
  double second = 0.0;      // wp''(x) = 6 wp^2 - g2/2
  double pole_proximity = 0.0;
};

// Weierstrass elliptic functions wp, wp', wp'' and zeta on the real line for
// one invariant pair.  Evaluation runs the Laurent series at x / 2^n, with n
// chosen so the reduced argument sits well inside the series radius, then
// climbs back with the duplication formulas
//
//   wp(2u)   = (wp''/wp')^2 / 4 - 2 wp(u)
//   wp'(2u)  = (wp''/wp') (12 wp - (wp''/wp')^2) / 4 - wp'(u)
//   zeta(2u) = 2 zeta(u) + wp''(u) / (2 wp'(u))
//
// so the error grows only linearly in n.  Periods are never computed.
class Weierstrass {
 public:
  explicit Weierstrass(const Invariants& inv, const EvalConfig& cfg = {});

  // wp, wp' and wp'' in one call.
  EvalResult wp_family(double x) const;
  double wp(double x) const;
  double zeta(double x) const;

  // Everything the evaluator knows about one argument.  zeta comes along for
  // free on the duplication ladder, and wp''' = 12 wp wp' closes the set of
  // derivatives needed for fourth-order jets downstream.
  struct State {
    double p = 0.0;     // wp
    double dp = 0.0;    // wp'
    double ddp = 0.0;   // wp''
    double z = 0.0;     // zeta
    double prox = 0.0;  // distance to the nearest detected pole
  };
  State eval(double x) const;

  const Invariants& invariants() const { return inv_; }
  const CubicRoots& roots() const { return roots_; }
  const EvalConfig& config() const { return cfg_; }
  double series_radius() const { return series_radius_; }

 private:
  struct Reduced {
    double p, dp, z;
  };

  Reduced series_eval(double t) const;
  State eval_positive(double x) const;
  bool duplicate(Reduced& r, int steps) const;

  Invariants inv_;
  EvalConfig cfg_;
  CubicRoots roots_;
  std::vector<double> c_;  // Laurent coefficients, index k in [2, series_terms+1]
  double series_radius_ = 0.5;
};

}  // namespace ellsol
