#include <benchmark/benchmark.h>

#include "prodbasis/gpt.hpp"

using namespace prodbasis;

namespace {

void BM_InertiaRandom(benchmark::State& state) {
  const FieldSpec q = FieldSpec::rational();
  const std::size_t n = state.range(0);
  Rng rng(1);
  Matrix m(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = sample(q, rng, 7);
  for (auto _ : state) benchmark::DoNotOptimize(inertia(m));
}

void BM_Counterexample(benchmark::State& state) {
  const TensorShape s = state.range(0) == 2 ? TensorShape({2, 2}) : TensorShape({2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(build_projection_counterexample(s));
}

void BM_StandardEnsemble(benchmark::State& state) {
  const std::size_t d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_distinguishable(standard_ensemble(d, d), true));
}

}  // namespace

BENCHMARK(BM_InertiaRandom)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_Counterexample)->Arg(2)->Arg(3);
BENCHMARK(BM_StandardEnsemble)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
