#include <benchmark/benchmark.h>

#include "prodbasis/construct.hpp"

using namespace prodbasis;

namespace {

FieldSpec field_of(int64_t code) { return code == 0 ? FieldSpec::rational() : FieldSpec::prime(code); }

Subspace random_codim(const TensorShape& s, const FieldSpec& f, std::size_t r, Rng& rng) {
  for (;;) {
    std::vector<TensorVector> cogens;
    for (std::size_t k = 0; k < r; ++k) {
      Vec c;
      for (std::size_t i = 0; i < s.total(); ++i) c.push_back(sample(f, rng, 5));
      cogens.emplace_back(s, f, std::move(c));
    }
    try {
      return Subspace::from_cogenerators(s, f, std::move(cogens));
    } catch (const std::invalid_argument&) {
      // dependent draw, try again
    }
  }
}

void BM_BipartiteCodim1(benchmark::State& state) {
  const std::size_t d = state.range(0);
  const FieldSpec f = field_of(state.range(1));
  const TensorShape s({d, d});
  Rng rng(1);
  const Subspace l = random_codim(s, f, 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bipartite_codim1_basis(l.cogenerators()[0]));
}

void BM_ProductTupleTripartite(benchmark::State& state) {
  const std::size_t d = state.range(0);
  const FieldSpec f = field_of(state.range(1));
  const TensorShape s({d, d, d});
  Rng rng(2);
  const Subspace l = random_codim(s, f, 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(product_tuple(l, {.seed = 7}));
}

void BM_ProductTupleCodim2(benchmark::State& state) {
  const std::size_t d = state.range(0);
  const TensorShape s({d, d});
  const FieldSpec q = FieldSpec::rational();
  Rng rng(3);
  const Subspace l = random_codim(s, q, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(product_tuple(l, {.seed = 7}));
}

}  // namespace

BENCHMARK(BM_BipartiteCodim1)->ArgsProduct({{2, 4, 8}, {0, 101}});
BENCHMARK(BM_ProductTupleTripartite)->ArgsProduct({{2, 3}, {0, 101}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductTupleCodim2)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
