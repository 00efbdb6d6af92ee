#include <benchmark/benchmark.h>

#include "prodbasis/linalg.hpp"

using namespace prodbasis;

namespace {

FieldSpec field_of(int64_t code) { return code == 0 ? FieldSpec::rational() : FieldSpec::prime(code); }

Matrix random_matrix(const FieldSpec& f, std::size_t n, Rng& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = sample(f, rng, 9);
  return m;
}

void BM_Rref(benchmark::State& state) {
  const FieldSpec f = field_of(state.range(1));
  Rng rng(1);
  const Matrix m = random_matrix(f, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void BM_Det(benchmark::State& state) {
  const FieldSpec f = field_of(state.range(1));
  Rng rng(2);
  const Matrix m = random_matrix(f, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}

void BM_RankNormalForm(benchmark::State& state) {
  const FieldSpec f = field_of(state.range(1));
  Rng rng(3);
  const Matrix m = random_matrix(f, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank_normal_form(m));
}

// field code 0 is Q, anything else is GF(code)
void field_args(benchmark::internal::Benchmark* b) {
  for (int64_t n : {4, 9, 16, 27})
    for (int64_t code : {0, 101, 1'000'000'007}) b->Args({n, code});
}

}  // namespace

BENCHMARK(BM_Rref)->Apply(field_args);
BENCHMARK(BM_Det)->Apply(field_args);
BENCHMARK(BM_RankNormalForm)->Apply(field_args);

BENCHMARK_MAIN();
