#pragma once

#include <memory>
#include <vector>

#include "ellsol/branch.hpp"
#include "ellsol/weierstrass.hpp"

namespace ellsol {

// One spectral parameter: the shift delta, lambda^2 = 4 wp(delta), and the
// cached zeta(delta) entering the seed solution.
struct SpectralParam {
  double delta = 0.0;
  double lambda_sq = 0.0;
  double zeta_delta = 0.0;
};

SpectralParam make_spectral_param(const Weierstrass& wp, double delta);

// Invariants plus an ordered list of spectral parameters.
struct SolitonSpec {
  Invariants invariants;
  std::vector<SpectralParam> params;
};

SolitonSpec make_spec(const Invariants& inv, const std::vector<double>& deltas);

// Rejects parameter lists whose lambda^2 values collide (the superposition
// denominators would degenerate): requires
// |lambda_i^2 - lambda_j^2| > 1e-10 * max(1, |lambda^2|) for every pair.
void validate(const SolitonSpec& spec);

// Seed solutions.  z0(x) = -2 zeta(x) + offset over the elliptic background;
// z_i(x) = -2 (zeta(x + delta_i) - zeta(delta_i)).
Branch seed_branch(std::shared_ptr<const Weierstrass> wp, double z0_offset = 0.0);
Branch seed_branch(std::shared_ptr<const Weierstrass> wp, const SpectralParam& p);

double one_soliton(const Weierstrass& wp, double x);                           // z0
double one_soliton(const Weierstrass& wp, double x, const SpectralParam& p);   // z_i

enum class Parity {
  kEven,  // z0 survives in the final expression; shifting it shifts the solution
  kOdd,   // z0 cancels; the solution is independent of its additive constant
};

// An N-parameter solution built over the subset lattice: every nonempty
// subset of parameters owns a branch, composed subsets are produced by one
// superposition step over two peeled indices, and each branch is defined
// once and shared.  Evaluation walks the lattice bottom-up per x.
class SolitonSolution {
 public:
  int order() const { return order_; }
  Parity parity() const { return order_ % 2 == 1 ? Parity::kOdd : Parity::kEven; }
  const SolitonSpec& spec() const { return spec_; }
  const std::shared_ptr<const Weierstrass>& kernel() const { return wp_; }
  double z0_offset() const { return z0_offset_; }

  // Full-order solution with seed-pole fill-in.
  BranchEval eval(double x) const;
  double operator()(double x) const { return eval(x).z.value(); }
  double derivative(double x) const { return eval(x).z.d1(); }  // u = z_x

  // Branch for a parameter subset given as a bitmask over param indices.
  BranchEval eval_subset(unsigned mask, double x) const;

  Branch branch() const;
  Branch subset_branch(unsigned mask) const;

  // Jets of every subset at one x, indexed by mask; entry 0 is z0.  This is
  // the raw lattice pass shared by the verifier.
  std::vector<BranchEval> eval_lattice(double x) const;

  // The commuting square that produced each composed subset: the base
  // subset, the two parents, and the peeled indices (i, j).
  struct Square {
    unsigned base = 0;
    unsigned with_i = 0;
    unsigned with_j = 0;
    unsigned full = 0;
    int i = 0;
    int j = 0;
  };
  std::vector<Square> squares() const;

 private:
  friend SolitonSolution build(const SolitonSpec&, double);

  BranchEval eval_mask_raw(unsigned mask, double x) const;

  std::shared_ptr<const Weierstrass> wp_;
  SolitonSpec spec_;
  double z0_offset_ = 0.0;
  int order_ = 0;
};

// Validates the spec and assembles the lattice.  The z0 offset is the free
// additive constant of the background seed; it matters only for even orders.
SolitonSolution build(const SolitonSpec& spec, double z0_offset = 0.0);

// Closed forms for small orders, written directly in the seeds.  They must
// agree with the lattice build wherever both are defined.
double z12_closed(const Weierstrass& wp, double x,
                  const SpectralParam& p1, const SpectralParam& p2,
                  double z0_offset = 0.0);
double z123_closed(const Weierstrass& wp, double x,
                   const SpectralParam& p1, const SpectralParam& p2,
                   const SpectralParam& p3);
double z1234_closed(const Weierstrass& wp, double x,
                    const SpectralParam& p1, const SpectralParam& p2,
                    const SpectralParam& p3, const SpectralParam& p4,
                    double z0_offset = 0.0);
double z12345_closed(const Weierstrass& wp, double x,
                     const SpectralParam& p1, const SpectralParam& p2,
                     const SpectralParam& p3, const SpectralParam& p4,
                     const SpectralParam& p5);

// Galilean lift of a static solution: u_hat(x, t) = u(x + b t) - b/6 solves
// the time-dependent flow with velocity b.  The constant shift is the whole
// point; a constructor flag exists so tests can turn it off as a negative
// control.
class TimeLift {
 public:
  TimeLift(SolitonSolution sol, double b, bool include_shift = true)
      : sol_(std::move(sol)), b_(b), include_shift_(include_shift) {}

  double operator()(double x, double t) const;

  // Jet of the static z at the shifted argument x + b t.
  BranchEval spatial(double x, double t) const { return sol_.eval(x + b_ * t); }

  const SolitonSolution& solution() const { return sol_; }
  double velocity() const { return b_; }
  bool includes_shift() const { return include_shift_; }

 private:
  SolitonSolution sol_;
  double b_;
  bool include_shift_;
};

TimeLift time_lift(SolitonSolution sol, double b);

}  // namespace ellsol
