#include "ellsol/soliton.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "ellsol/errors.hpp"

namespace ellsol {

namespace {

constexpr int kMaxOrder = 16;
constexpr double kLambdaGapTol = 1e-10;

Jet nan_jet() {
  Jet j;
  j.coef.fill(std::numeric_limits<double>::quiet_NaN());
  return j;
}

// Jet of -2 zeta(arg) from one kernel state: zeta' = -wp closes the tower,
// ending at the fourth derivative through wp''' = 12 wp wp'.
Jet seed_jet(const Weierstrass::State& s, double constant_term) {
  const double dddp = 12.0 * s.p * s.dp;
  return Jet::from_derivatives(-2.0 * s.z + constant_term, 2.0 * s.p, 2.0 * s.dp,
                               2.0 * s.ddp, 2.0 * dddp);
}

BranchEval eval_seed(const Weierstrass& wp, double arg, double constant_term) {
  BranchEval e;
  try {
    const Weierstrass::State s = wp.eval(arg);
    e.z = seed_jet(s, constant_term);
    e.seed_prox = s.prox;
  } catch (const PoleProximity& ex) {
    e.z = nan_jet();
    e.seed_prox = ex.proximity();
  }
  return e;
}

double denom_distance(const Jet& d) {
  const double slope = std::max(std::abs(d.d1()), 1e-30);
  return std::abs(d.value()) / slope;
}

}  // namespace

SpectralParam make_spectral_param(const Weierstrass& wp, double delta) {
  const Weierstrass::State s = wp.eval(delta);
  SpectralParam p;
  p.delta = delta;
  p.lambda_sq = 4.0 * s.p;
  p.zeta_delta = s.z;
  return p;
}

SolitonSpec make_spec(const Invariants& inv, const std::vector<double>& deltas) {
  SolitonSpec spec;
  spec.invariants = inv;
  const Weierstrass wp(inv);
  spec.params.reserve(deltas.size());
  for (double d : deltas) spec.params.push_back(make_spectral_param(wp, d));
  validate(spec);
  return spec;
}

void validate(const SolitonSpec& spec) {
  const size_t n = spec.params.size();
  if (n > kMaxOrder) throw DomainError("too many spectral parameters");

  const Weierstrass wp(spec.invariants);
  for (const auto& p : spec.params) {
    const double expected = 4.0 * wp.wp(p.delta);
    const double scale = std::max(1.0, std::abs(expected));
    if (std::abs(p.lambda_sq - expected) > 1e-10 * scale) {
      throw DomainError("lambda^2 inconsistent with 4 wp(delta)");
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const double li = spec.params[i].lambda_sq;
      const double lj = spec.params[j].lambda_sq;
      const double scale = std::max({1.0, std::abs(li), std::abs(lj)});
      if (std::abs(li - lj) <= kLambdaGapTol * scale) {
        throw DegenerateDeltas("spectral parameters collide in lambda^2");
      }
    }
  }
}

Branch seed_branch(std::shared_ptr<const Weierstrass> wp, double z0_offset) {
  if (!wp) throw DomainError("seed_branch needs a kernel");
  return Branch([wp, z0_offset](double x) { return eval_seed(*wp, x, z0_offset); });
}

Branch seed_branch(std::shared_ptr<const Weierstrass> wp, const SpectralParam& p) {
  if (!wp) throw DomainError("seed_branch needs a kernel");
  const double delta = p.delta;
  const double offset = 2.0 * p.zeta_delta;
  return Branch([wp, delta, offset](double x) { return eval_seed(*wp, x + delta, offset); });
}

double one_soliton(const Weierstrass& wp, double x) { return -2.0 * wp.zeta(x); }

double one_soliton(const Weierstrass& wp, double x, const SpectralParam& p) {
  return -2.0 * (wp.zeta(x + p.delta) - p.zeta_delta);
}

// An empty parameter list is allowed and yields the bare background z0.
SolitonSolution build(const SolitonSpec& spec, double z0_offset) {
  validate(spec);
  SolitonSolution sol;
  sol.wp_ = std::make_shared<Weierstrass>(spec.invariants);
  sol.spec_ = spec;
  sol.z0_offset_ = z0_offset;
  sol.order_ = static_cast<int>(spec.params.size());
  return sol;
}

std::vector<BranchEval> SolitonSolution::eval_lattice(double x) const {
  const unsigned full = (1u << order_) - 1u;
  std::vector<BranchEval> evals(full + 1);

  evals[0] = eval_seed(*wp_, x, z0_offset_);
  for (int i = 0; i < order_; ++i) {
    const auto& p = spec_.params[static_cast<size_t>(i)];
    evals[1u << i] = eval_seed(*wp_, x + p.delta, 2.0 * p.zeta_delta);
  }

  // Masks in increasing numeric order: every proper submask is smaller, so
  // parents are always ready.  Peel the two highest indices of each subset.
  for (unsigned mask = 3; mask <= full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    const int j = std::bit_width(mask) - 1;
    const int i = std::bit_width(mask & ~(1u << j)) - 1;
    const unsigned with_i = mask & ~(1u << j);
    const unsigned with_j = mask & ~(1u << i);
    const unsigned base = mask & ~((1u << i) | (1u << j));

    const BranchEval& eb = evals[base];
    const BranchEval& ea = evals[with_i];
    const BranchEval& ec = evals[with_j];
    const double gap = spec_.params[static_cast<size_t>(i)].lambda_sq -
                       spec_.params[static_cast<size_t>(j)].lambda_sq;

    BranchEval& out = evals[mask];
    const Jet d = ea.z - ec.z;
    out.z = eb.z + gap / d;
    out.seed_prox = std::min({eb.seed_prox, ea.seed_prox, ec.seed_prox});
    out.denom_prox =
        std::min({eb.denom_prox, ea.denom_prox, ec.denom_prox, denom_distance(d)});
  }
  return evals;
}

BranchEval SolitonSolution::eval_mask_raw(unsigned mask, double x) const {
  return eval_lattice(x)[mask];
}

BranchEval SolitonSolution::eval_subset(unsigned mask, double x) const {
  const unsigned full = (1u << order_) - 1u;
  if (mask > full) throw DomainError("subset mask outside the parameter set");
  return eval_with_fill([this, mask](double xx) { return eval_mask_raw(mask, xx); }, x);
}

BranchEval SolitonSolution::eval(double x) const {
  return eval_subset((1u << order_) - 1u, x);
}

Branch SolitonSolution::subset_branch(unsigned mask) const {
  const unsigned full = (1u << order_) - 1u;
  if (mask > full) throw DomainError("subset mask outside the parameter set");
  SolitonSolution copy = *this;
  return Branch([copy, mask](double x) { return copy.eval_mask_raw(mask, x); });
}

Branch SolitonSolution::branch() const { return subset_branch((1u << order_) - 1u); }

std::vector<SolitonSolution::Square> SolitonSolution::squares() const {
  std::vector<Square> out;
  const unsigned full = (1u << order_) - 1u;
  for (unsigned mask = 3; mask <= full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    const int j = std::bit_width(mask) - 1;
    const int i = std::bit_width(mask & ~(1u << j)) - 1;
    Square s;
    s.full = mask;
    s.with_i = mask & ~(1u << j);
    s.with_j = mask & ~(1u << i);
    s.base = mask & ~((1u << i) | (1u << j));
    s.i = i;
    s.j = j;
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

struct SeedValues {
  double z0 = 0.0;
  std::array<double, 5> z{};
  std::array<double, 5> lam{};
};

template <size_t N>
SeedValues seed_values(const Weierstrass& wp, double x,
                       const std::array<const SpectralParam*, N>& ps, double z0_offset) {
  SeedValues v;
  v.z0 = -2.0 * wp.zeta(x) + z0_offset;
  for (size_t i = 0; i < N; ++i) {
    v.z[i] = -2.0 * (wp.zeta(x + ps[i]->delta) - ps[i]->zeta_delta);
    v.lam[i] = ps[i]->lambda_sq;
  }
  return v;
}

int permutation_sign(const int* idx, int n) {
  int inversions = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (idx[a] > idx[b]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

double z12_closed(const Weierstrass& wp, double x, const SpectralParam& p1,
                  const SpectralParam& p2, double z0_offset) {
  const auto v = seed_values<2>(wp, x, {&p1, &p2}, z0_offset);
  return v.z0 + (v.lam[0] - v.lam[1]) / (v.z[0] - v.z[1]);
}

// Cyclic three-parameter form:
//   z123 = - sum_cyc (lam_i^2 - lam_j^2) z_i z_j / sum_cyc (lam_i^2 - lam_j^2) z_k
double z123_closed(const Weierstrass& wp, double x, const SpectralParam& p1,
                   const SpectralParam& p2, const SpectralParam& p3) {
  const auto v = seed_values<3>(wp, x, {&p1, &p2, &p3}, 0.0);
  const double l12 = v.lam[0] - v.lam[1];
  const double l23 = v.lam[1] - v.lam[2];
  const double l31 = v.lam[2] - v.lam[0];
  const double num = l12 * v.z[0] * v.z[1] + l23 * v.z[1] * v.z[2] + l31 * v.z[2] * v.z[0];
  const double den = l12 * v.z[2] + l23 * v.z[0] + l31 * v.z[1];
  return -num / den;
}

// Four parameters, as an antisymmetric sum over index permutations:
//   z1234 = z0 + G/F
//   F = sum eps^{ijkl} (li - lj)(lk - ll) z_i z_j
//   G = -2 sum eps^{ijkl} li lj (li - lj) z_k
double z1234_closed(const Weierstrass& wp, double x, const SpectralParam& p1,
                    const SpectralParam& p2, const SpectralParam& p3,
                    const SpectralParam& p4, double z0_offset) {
  const auto v = seed_values<4>(wp, x, {&p1, &p2, &p3, &p4}, z0_offset);
  int idx[4] = {0, 1, 2, 3};
  double f = 0.0;
  double g = 0.0;
  do {
    const int sign = permutation_sign(idx, 4);
    const double li = v.lam[idx[0]];
    const double lj = v.lam[idx[1]];
    const double lk = v.lam[idx[2]];
    const double ll = v.lam[idx[3]];
    f += sign * (li - lj) * (lk - ll) * v.z[idx[0]] * v.z[idx[1]];
    g += -2.0 * sign * li * lj * (li - lj) * v.z[idx[2]];
  } while (std::next_permutation(idx, idx + 4));
  return v.z0 + g / f;
}

// Five parameters:
//   z12345 = G/F with weight w = eps^{ijklm} (li - lj)(lk - ll)(ll - lm)(lm - lk),
//   F = sum w z_i z_j, G = sum w z_k z_l z_m.
double z12345_closed(const Weierstrass& wp, double x, const SpectralParam& p1,
                     const SpectralParam& p2, const SpectralParam& p3,
                     const SpectralParam& p4, const SpectralParam& p5) {
  const auto v = seed_values<5>(wp, x, {&p1, &p2, &p3, &p4, &p5}, 0.0);
  int idx[5] = {0, 1, 2, 3, 4};
  double f = 0.0;
  double g = 0.0;
  do {
    const int sign = permutation_sign(idx, 5);
    const double li = v.lam[idx[0]];
    const double lj = v.lam[idx[1]];
    const double lk = v.lam[idx[2]];
    const double ll = v.lam[idx[3]];
    const double lm = v.lam[idx[4]];
    const double w = sign * (li - lj) * (lk - ll) * (ll - lm) * (lm - lk);
    f += w * v.z[idx[0]] * v.z[idx[1]];
    g += w * v.z[idx[2]] * v.z[idx[3]] * v.z[idx[4]];
  } while (std::next_permutation(idx, idx + 5));
  return g / f;
}

double TimeLift::operator()(double x, double t) const {
  const BranchEval e = spatial(x, t);
  const double shift = include_shift_ ? b_ / 6.0 : 0.0;
  return e.z.d1() - shift;
}

TimeLift time_lift(SolitonSolution sol, double b) { return TimeLift(std::move(sol), b); }

}  // namespace ellsol
