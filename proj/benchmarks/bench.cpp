#include <benchmark/benchmark.h>

#include "rainbow/finder.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/oracle.hpp"

using namespace rainbow;

static void BM_OracleOneFactorization(benchmark::State& state) {
  auto g = one_factorization_complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = max_rainbow_matching(g);
    benchmark::DoNotOptimize(res.size);
  }
}
BENCHMARK(BM_OracleOneFactorization)->Arg(8)->Arg(10)->Arg(12);

static void BM_OracleLatin(benchmark::State& state) {
  auto g = latin_knn(cyclic_latin(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto res = max_rainbow_matching(g);
    benchmark::DoNotOptimize(res.size);
  }
}
BENCHMARK(BM_OracleLatin)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

static void BM_OracleCutoffRandom(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  auto g = random_with_min_colour_degree(4 * k - 4, k, k + 2, 0.3, 1);
  for (auto _ : state) {
    bool has = has_rainbow_matching_of_size(g, k);
    benchmark::DoNotOptimize(has);
  }
}
BENCHMARK(BM_OracleCutoffRandom)->Arg(4)->Arg(5)->Arg(6);

static void BM_FinderRandom(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  int n = k <= 3 ? 4 * k - 3 : 4 * k - 4;
  auto g = random_with_min_colour_degree(n, k, k + 2, 0.3, 1);
  for (auto _ : state) {
    auto res = find_rainbow_matching(g, k);
    benchmark::DoNotOptimize(res.found());
  }
}
BENCHMARK(BM_FinderRandom)->DenseRange(2, 7);

static void BM_FinderDense(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  auto g = random_with_min_colour_degree(6 * k, k, k + 2, 0.6, 2);
  for (auto _ : state) {
    auto res = find_rainbow_matching(g, k);
    benchmark::DoNotOptimize(res.found());
  }
}
BENCHMARK(BM_FinderDense)->Arg(4)->Arg(6)->Arg(8);

static void BM_RandomGenerator(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto g = random_with_min_colour_degree(n, 4, 6, 0.3, ++seed);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_RandomGenerator)->Arg(12)->Arg(24)->Arg(48);

BENCHMARK_MAIN();
