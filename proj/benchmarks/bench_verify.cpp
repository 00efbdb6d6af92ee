#include <benchmark/benchmark.h>

#include "prodbasis/construct.hpp"
#include "prodbasis/verify.hpp"

using namespace prodbasis;

namespace {

TensorShape shape_of(int64_t code) {
  switch (code) {
    case 0: return TensorShape({2, 2});
    case 1: return TensorShape({2, 3});
    case 2: return TensorShape({3, 3});
    default: return TensorShape({2, 2, 2});
  }
}

void BM_EnumerateWitness(benchmark::State& state) {
  const TensorShape s = shape_of(state.range(0));
  const FieldSpec f = FieldSpec::prime(state.range(1));
  const Subspace l = witness_no_product_basis(s, f);
  for (auto _ : state) benchmark::DoNotOptimize(has_product_basis_bruteforce(l));
  state.counters["products"] = static_cast<double>(projective_product_count(s, f));
}

void BM_FactorProduct(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(101);
  const std::vector<Vec> factors = {Vec{Scalar(f, 1), Scalar(f, 2), Scalar(f, 3)},
                                    Vec{Scalar(f, 0), Scalar(f, 5), Scalar(f, 7)},
                                    Vec{Scalar(f, 4), Scalar(f, 0), Scalar(f, 9)}};
  const TensorVector v = kron(factors).embedded;
  for (auto _ : state) benchmark::DoNotOptimize(factor_product(v));
}

void BM_Sweep(benchmark::State& state) {
  const TensorShape s = shape_of(state.range(0));
  const FieldSpec f = FieldSpec::prime(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_codim1(s, f));
}

}  // namespace

BENCHMARK(BM_EnumerateWitness)->ArgsProduct({{0, 1, 2, 3}, {2, 3}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FactorProduct);
BENCHMARK(BM_Sweep)->Args({0, 2})->Args({0, 3})->Args({1, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
