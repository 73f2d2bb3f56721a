#include <benchmark/benchmark.h>

#include "ppb/numeric.hpp"
#include "ppb/poly.hpp"
#include "ppb/states.hpp"
#include "ppb_tool/verify.hpp"

namespace {

using namespace ppb;

void BM_HermiteRecurrence(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_ppb(Sign::plus, n));
}
BENCHMARK(BM_HermiteRecurrence)->RangeMultiplier(2)->Range(4, 64);

void BM_HermiteClosedForm(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_ppb_rodrigues(Sign::plus, n));
}
BENCHMARK(BM_HermiteClosedForm)->RangeMultiplier(2)->Range(4, 64);

void BM_LadderState(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nth_state_ladder(Sign::minus, n));
}
BENCHMARK(BM_LadderState)->RangeMultiplier(2)->Range(4, 32);

void BM_EigenCheck(benchmark::State& state) {
  const auto f = nth_state_poly(Sign::plus, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigen_check(f, Observable::hamiltonian));
}
BENCHMARK(BM_EigenCheck)->Arg(4)->Arg(12)->Arg(24);

void BM_EigenResidual(benchmark::State& state) {
  const GridSpec grid(-4.0, 4.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigen_residual(Sign::plus, 5, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EigenResidual)->Arg(1025)->Arg(8193)->Arg(65537);

void BM_Verify(benchmark::State& state) {
  const auto max_n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tool::run_verify(max_n));
}
BENCHMARK(BM_Verify)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
