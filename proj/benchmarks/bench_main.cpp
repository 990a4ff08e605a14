#include <benchmark/benchmark.h>

#include "progressio/classify.hpp"
#include "progressio/constructors.hpp"
#include "progressio/numtheory.hpp"
#include "progressio/spectra.hpp"

using namespace progressio;

namespace {

void BM_CloseGroupAlternating(benchmark::State& state) {
  auto const n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(constructors::alternating(n).order());
}
BENCHMARK(BM_CloseGroupAlternating)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ElementSpectrum(benchmark::State& state) {
  auto const g = constructors::alternating(7);
  for (auto _ : state) benchmark::DoNotOptimize(spectra::element_order_spectrum(g));
}
BENCHMARK(BM_ElementSpectrum)->Unit(benchmark::kMicrosecond);

void BM_SubgroupLattice(benchmark::State& state) {
  auto const g = state.range(0) == 0 ? constructors::symmetric(5) : constructors::alternating(6);
  state.SetLabel(state.range(0) == 0 ? "S5" : "A6");
  for (auto _ : state) benchmark::DoNotOptimize(spectra::enumerate_subgroups(g, 720).size());
}
BENCHMARK(BM_SubgroupLattice)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FrobeniusFieldAction(benchmark::State& state) {
  for (auto _ : state) {
    auto const g = constructors::frobenius_field_action(5, 3);
    benchmark::DoNotOptimize(classify::frobenius_decomposition(g));
  }
}
BENCHMARK(BM_FrobeniusFieldAction)->Unit(benchmark::kMillisecond);

void BM_CunninghamPairs(benchmark::State& state) {
  auto const limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numtheory::cunningham_pairs(limit).size());
}
BENCHMARK(BM_CunninghamPairs)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
