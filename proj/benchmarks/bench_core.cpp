#include <benchmark/benchmark.h>

#include "telwit/telwit.hpp"

namespace {

using namespace telwit;

int dim_arg(const benchmark::State& state) { return static_cast<int>(state.range(0)); }

void BM_HaarUnitary(benchmark::State& state) {
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(haar_unitary(dim_arg(state), rng));
}
BENCHMARK(BM_HaarUnitary)->Arg(2)->Arg(3);

void BM_EstimateMef(benchmark::State& state) {
  const DensityMatrix sigma = random_density(dim_arg(state), 7ULL);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_mef(sigma, OracleParams{}, 1));
}
BENCHMARK(BM_EstimateMef)->Arg(2)->Arg(3);

void BM_DykstraProject(benchmark::State& state) {
  const int d = dim_arg(state);
  Rng rng(3);
  ConstraintSet cs = ConstraintSet::identity_only(d);
  while (cs.size() < 5) cs.add(haar_unitary(d, rng));
  const DensityMatrix rho = random_density(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(dykstra_project(rho, cs));
}
BENCHMARK(BM_DykstraProject)->Arg(2)->Arg(3);

void BM_SolveWerner(benchmark::State& state) {
  const DensityMatrix rho = werner(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve(rho));
}
BENCHMARK(BM_SolveWerner);

void BM_SolveQutrit(benchmark::State& state) {
  const DensityMatrix rho = qutrit_nme(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve(rho));
}
BENCHMARK(BM_SolveQutrit);

void BM_WitnessDecompose(benchmark::State& state) {
  const DensityMatrix rho = qutrit_nme(1.0);
  const SolveReport rep = solve(rho);
  const WitnessOperator w = normalize_witness(construct_witness(rho, rep.sigma_star));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(w, 3));
}
BENCHMARK(BM_WitnessDecompose);

}  // namespace

BENCHMARK_MAIN();
