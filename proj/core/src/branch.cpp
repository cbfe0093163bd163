#include "ellsol/branch.hpp"

#include <cmath>

#include "ellsol/errors.hpp"

namespace ellsol {

namespace {

// Smallest admissible first series coefficient of a superposition
// denominator before the distance estimate falls back to the value itself.
constexpr double kDenomSlopeFloor = 1e-30;

bool fill_sides_disagree(double lo, double hi) {
  return std::abs(hi - lo) > 0.5 * (std::abs(hi) + std::abs(lo)) + 10.0;
}

}  // namespace

BranchEval eval_with_fill(const std::function<BranchEval(double)>& raw, double x) {
  BranchEval e = raw(x);
  if (e.z.finite() || e.pole) return e;

  // A seed argument fell inside a kernel exclusion zone.  The composed
  // solution is usually regular there, so rebuild the jet from symmetric
  // offsets; disagreement between the two sides marks a genuine pole.
  const BranchEval lo = raw(x - kSeedFillOffset);
  const BranchEval hi = raw(x + kSeedFillOffset);
  if (!lo.z.finite() || !hi.z.finite()) {
    e.pole = true;
    return e;
  }
  if (fill_sides_disagree(lo.z.value(), hi.z.value())) {
    e.pole = true;
    e.seed_prox = std::min(lo.seed_prox, hi.seed_prox);
    e.denom_prox = std::min(lo.denom_prox, hi.denom_prox);
    return e;
  }

  BranchEval avg;
  for (int k = 0; k <= Jet::kOrder; ++k) {
    avg.z.coef[k] = 0.5 * (lo.z.coef[k] + hi.z.coef[k]);
  }
  avg.seed_prox = std::min(lo.seed_prox, hi.seed_prox);
  avg.denom_prox = std::min(lo.denom_prox, hi.denom_prox);
  avg.interpolated = true;
  return avg;
}

BranchEval Branch::operator()(double x) const { return eval_with_fill(fn_, x); }

Branch zero_branch() { return constant_branch(0.0); }

Branch constant_branch(double c) {
  return Branch([c](double) {
    BranchEval e;
    e.z = Jet::constant(c);
    return e;
  });
}

double hyperbolic_one_soliton(double x, double lam, double shift) {
  return -lam * std::tanh(0.5 * (lam * x + shift));
}

Branch hyperbolic_branch(double lam, double shift) {
  return Branch([lam, shift](double x) {
    // Jet of tanh(u(x)) with u = (lam x + shift)/2: t' = 1 - t^2 and the
    // chain rule close the derivative tower.
    const double a = 0.5 * lam;
    const double t = std::tanh(a * x + 0.5 * shift);
    const double s = 1.0 - t * t;
    const double t1 = a * s;
    const double t2 = -2.0 * a * t * t1;
    const double t3 = -2.0 * a * (t1 * t1 + t * t2);
    const double t4 = -2.0 * a * (3.0 * t1 * t2 + t * t3);
    BranchEval e;
    e.z = Jet::from_derivatives(t, t1, t2, t3, t4) * (-lam);
    return e;
  });
}

Branch superpose(const Branch& base, const Branch& a, const Branch& b,
                 double lam_a_sq, double lam_b_sq) {
  if (!base.valid() || !a.valid() || !b.valid()) {
    throw DomainError("superpose needs three valid branches");
  }
  const double gap = lam_a_sq - lam_b_sq;
  return Branch([=](double x) {
    const BranchEval eb = base.eval_raw(x);
    const BranchEval ea = a.eval_raw(x);
    const BranchEval ec = b.eval_raw(x);

    const Jet d = ea.z - ec.z;
    BranchEval out;
    out.z = eb.z + gap / d;
    out.seed_prox = std::min({eb.seed_prox, ea.seed_prox, ec.seed_prox});

    const double slope = std::max(std::abs(d.d1()), kDenomSlopeFloor);
    const double dist = std::abs(d.value()) / slope;
    out.denom_prox = std::min({eb.denom_prox, ea.denom_prox, ec.denom_prox, dist});
    return out;
  });
}

}  // namespace ellsol
