// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "ginlab/points.hpp"
#include "ginlab/sylvester.hpp"

using namespace ginlab;

namespace {

DenseMatrix<PrimeField> random_matrix(std::size_t m, std::size_t n, std::uint64_t seed) {
  PrimeField k;
  SplitMix64 rng(seed);
  DenseMatrix<PrimeField> a(k, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = k.random(rng);
  }
  return a;
}

// state.range(0): matrix size, state.range(1): threads (0 = serial reference)
void BM_RowReduce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const auto base = random_matrix(n, n + n / 2, 1);
  for (auto _ : state) {
    auto m = base;
    auto pivots = threads == 0 ? row_reduce_serial(m) : row_reduce_parallel(m, threads);
    benchmark::DoNotOptimize(pivots);
  }
}

PolyMatrix<PrimeField> sylvester_matrix(int a, int b, int p) {
  auto ring = RingContext<PrimeField>::create(4);
  SplitMix64 rng(3);
  auto monic = [&](int d) {
    std::vector<Term<PrimeField>> terms;
    for (const auto& m : monomials_of_degree(4, d)) {
      terms.push_back({m, m[0] == d ? ring->field().one() : ring->field().random(rng)});
    }
    return Polynomial<PrimeField>::from_terms(ring, std::move(terms));
  };
  return build_sylp(monic(a), monic(b), p);
}

void BM_Minors(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const auto m = sylvester_matrix(4, 5, 2);
  for (auto _ : state) {
    auto minors = threads == 0 ? maximal_minors_serial(m) : maximal_minors_parallel(m, threads);
    benchmark::DoNotOptimize(minors);
  }
}

void BM_VanishingIdeal(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const auto pts = random_points<PrimeField>(12, 3, 5);
  for (auto _ : state) {
    auto ideal = vanishing_ideal(pts, -1, threads);
    benchmark::DoNotOptimize(ideal);
  }
}

}  // namespace

BENCHMARK(BM_RowReduce)->ArgsProduct({{64, 256}, {0, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Minors)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VanishingIdeal)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
