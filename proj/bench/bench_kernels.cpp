// Serial reference against the OpenMP path for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "garside/curves.hpp"
#include "garside/family.hpp"

using namespace garside;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(1) ? Execution::kParallel : Execution::kSerial;
}

FamilyElement element(int k, int n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(100 * n + k));
  return sample_m0_element(rng, k, n);
}

void BM_MinimalConjugators(benchmark::State& state) {
  const Braid x = alpha(element(2, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_conjugators(x, {}, exec_of(state)));
}

void BM_EnumerateClass(benchmark::State& state) {
  const Braid x = alpha(element(2, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_class(x, {}, exec_of(state)));
}

void BM_StandardReduction(benchmark::State& state) {
  const Braid x = alpha(element(3, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(find_standard_reduction(x, exec_of(state)));
}

void BM_FamilyGraph(benchmark::State& state) {
  const FamilyElement e = element(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(family_rigid_graph(e, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_MinimalConjugators)->ArgsProduct({{10, 11}, {0, 1}})->ArgNames({"n", "par"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateClass)->ArgsProduct({{10}, {0, 1}})->ArgNames({"n", "par"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StandardReduction)->ArgsProduct({{16, 24}, {0, 1}})->ArgNames({"n", "par"})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FamilyGraph)->ArgsProduct({{16, 18}, {0, 1}})->ArgNames({"n", "par"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
