#include <benchmark/benchmark.h>

#include "jacobi_edge/circular.hpp"
#include "jacobi_edge/gap_solvers.hpp"
#include "jacobi_edge/special.hpp"
#include "jacobi_edge/verification.hpp"

using namespace jacobi_edge;

namespace {

void BM_PolyGap(benchmark::State& state) {
  const JacobiParams p{make_rational(2), make_rational(state.range(0)), make_rational(3, 2), 8};
  for (auto _ : state) benchmark::DoNotOptimize(gap_case1(p));
}
BENCHMARK(BM_PolyGap)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EdgeSeriesNested(benchmark::State& state) {
  const JacobiParams p{make_rational(1), make_rational(17, 3), make_rational(2), state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(solve_gap(p, Scheme::case3_nested));
}
BENCHMARK(BM_EdgeSeriesNested)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_Gauss2F1(benchmark::State& state) {
  const HypParams h{make_rational(3, 2), make_rational(7, 4), make_rational(11, 3)};
  const Real s(static_cast<double>(state.range(0)) / 100);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_2f1(h, s));
}
BENCHMARK(BM_Gauss2F1)->Arg(30)->Arg(70)->Arg(95)->Unit(benchmark::kMicrosecond);

void BM_CircularGap(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(circ_gap_integer_beta(state.range(0), 2));
}
BENCHMARK(BM_CircularGap)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const CSModelParams p = CSModelParams::from({make_rational(1), make_rational(2), make_rational(1), state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(sample_lambda_max(p, 10000, 7, 1));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MonteCarlo)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
