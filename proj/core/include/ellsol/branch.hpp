#pragma once

#include <functional>
#include <limits>

#include "ellsol/jet.hpp"

namespace ellsol {

// One evaluation of a solution branch: the jet of z at x plus bookkeeping on
// how close the evaluation came to trouble.  Two distance channels are kept
// apart on purpose.  seed_prox measures distance to singularities of the
// underlying kernel arguments; these are usually removable in composed
// branches.  denom_prox measures distance to zeros of superposition
// denominators, which is where genuine poles of the composed solution live.
struct BranchEval {
  Jet z{};
  double seed_prox = std::numeric_limits<double>::infinity();
  double denom_prox = std::numeric_limits<double>::infinity();
  bool pole = false;          // a hard pole was identified at this x
  bool interpolated = false;  // value filled from symmetric offsets

  double repr_prox() const { return seed_prox < denom_prox ? seed_prox : denom_prox; }
  bool usable() const { return !pole && z.finite(); }
};

// A solution branch z(x): any evaluatable composition of seeds under the
// superposition rule.  Composed branches are closures over their parents, so
// a branch stays valid as long as the kernel it captured does.
class Branch {
 public:
  using Fn = std::function<BranchEval(double)>;

  Branch() = default;
  explicit Branch(Fn fn) : fn_(std::move(fn)) {}

  bool valid() const { return static_cast<bool>(fn_); }

  // Raw evaluation.  Near a seed singularity the jet carries NaNs; callers
  // that need a value there should use eval below.
  BranchEval eval_raw(double x) const { return fn_(x); }

  // Evaluation with seed-pole fill-in: an x that lands inside a kernel
  // exclusion zone is recovered from symmetric offsets when the branch is
  // actually regular there, and flagged as a pole when it is not.
  BranchEval operator()(double x) const;

 private:
  Fn fn_;
};

// Offset used by the symmetric fill-in around seed singularities.  Chosen to
// clear the default kernel exclusion radius with margin.
inline constexpr double kSeedFillOffset = 3e-4;

// Shared fill-in helper for anything that evaluates like a branch.
BranchEval eval_with_fill(const std::function<BranchEval(double)>& raw, double x);

// z(x) = 0, the flat background.
Branch zero_branch();
Branch constant_branch(double c);

// z(x) = -lam * tanh((lam x + shift) / 2), the degenerate one-soliton over a
// flat background; satisfies z_x = (z^2 - lam^2) / 2.
Branch hyperbolic_branch(double lam, double shift);
double hyperbolic_one_soliton(double x, double lam, double shift);

// Superposition: z = z_base + (lam_a^2 - lam_b^2) / (z_a - z_b).
Branch superpose(const Branch& base, const Branch& a, const Branch& b,
                 double lam_a_sq, double lam_b_sq);

}  // namespace ellsol
