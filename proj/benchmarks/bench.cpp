#include <benchmark/benchmark.h>

#include <memory>

#include "ellsol/jacobi.hpp"
#include "ellsol/soliton.hpp"
#include "ellsol/verifier.hpp"
#include "ellsol/weierstrass.hpp"

using namespace ellsol;

namespace {

const Invariants kInv{0.3, 0.7};

void bm_wp_eval(benchmark::State& state) {
  const Weierstrass wp(kInv);
  double x = 0.11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wp.eval(x));
    x = x < 1.9 ? x + 1e-3 : 0.11;  // sweep the ladder depths
  }
}
BENCHMARK(bm_wp_eval);

void bm_zeta(benchmark::State& state) {
  const Weierstrass wp(kInv);
  double x = 0.11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wp.zeta(x));
    x = x < 1.9 ? x + 1e-3 : 0.11;
  }
}
BENCHMARK(bm_zeta);

void bm_sn_cn_dn(benchmark::State& state) {
  const Modulus m{0.5};
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sn_cn_dn(x, m));
    x = x < 3.0 ? x + 1e-3 : 0.0;
  }
}
BENCHMARK(bm_sn_cn_dn);

void bm_solution_eval(benchmark::State& state) {
  const auto n = static_cast<size_t>(state.range(0));
  const std::vector<double> all{-0.02, 0.03, 0.05, 0.07, -0.04};
  const SolitonSolution sol =
      build(make_spec(kInv, {all.begin(), all.begin() + static_cast<long>(n)}));
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sol.eval(x));
    x = x < 1.9 ? x + 1e-3 : 0.3;
  }
  state.SetLabel("order " + std::to_string(n));
}
BENCHMARK(bm_solution_eval)->Arg(1)->Arg(2)->Arg(3)->Arg(5);

void bm_static_residual_grid(benchmark::State& state) {
  const SolitonSolution sol = build(make_spec(kInv, {-0.02, 0.04}));
  const GridSpec grid;
  for (auto _ : state) {
    benchmark::DoNotOptimize(static_kdv_residual(sol, grid));
  }
}
BENCHMARK(bm_static_residual_grid);

void bm_identity_suite(benchmark::State& state) {
  GridSpec grid;
  grid.n_points = 201;
  for (auto _ : state) {
    benchmark::DoNotOptimize(identity_suite(kInv, grid));
  }
}
BENCHMARK(bm_identity_suite);

}  // namespace

BENCHMARK_MAIN();
