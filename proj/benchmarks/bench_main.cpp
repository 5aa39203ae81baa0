#include <benchmark/benchmark.h>

#include "spernerlab/binomial.hpp"
#include "spernerlab/coefficients.hpp"
#include "spernerlab/compression.hpp"
#include "spernerlab/constructions.hpp"
#include "spernerlab/cycle.hpp"
#include "spernerlab/cycle_generators.hpp"
#include "spernerlab/family.hpp"
#include "spernerlab/generators.hpp"
#include "spernerlab/search.hpp"

using namespace spernerlab;

static void BM_Search(benchmark::State& state) {
  const Params p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(max_family(SearchSpec(p)).best_size);
}
BENCHMARK(BM_Search)->Args({5, 2, 2})->Args({6, 1, 2})->Args({7, 2, 2})->Unit(benchmark::kMillisecond);

static void BM_Shadow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family layer = Family::full_layer(n, n / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(shadow(layer, n / 2).size());
}
BENCHMARK(BM_Shadow)->Arg(10)->Arg(14)->Arg(16);

static void BM_LongestChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family f = construct_layers(Params(n, 2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(longest_chain(f));
}
BENCHMARK(BM_LongestChain)->Arg(10)->Arg(12);

static void BM_Normalize(benchmark::State& state) {
  const Params p(10, 2, 2);
  Rng rng(5);
  std::vector<Family> families;
  for (int i = 0; i < 32; ++i) families.push_back(random_valid_family(p, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(families[i++ % families.size()], p).family.size());
}
BENCHMARK(BM_Normalize);

static void BM_Inequalities(benchmark::State& state) {
  const Params p(static_cast<int>(state.range(0)), 2, 3);
  Rng rng(7);
  std::vector<CycleInstance> instances;
  while (instances.size() < 16)
    if (auto inst = random_full_consecutive(p, 1, rng)) instances.push_back(std::move(*inst));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& inst = instances[i++ % instances.size()];
    benchmark::DoNotOptimize(check_inequalities(inst.full, p).all_hold());
  }
}
BENCHMARK(BM_Inequalities)->Arg(20)->Arg(40);

static void BM_CoefficientChain(benchmark::State& state) {
  const Params p(40, 2, 3);
  Rng rng(11);
  std::vector<GProfile> profiles;
  while (profiles.size() < 16)
    if (auto inst = random_full_consecutive(p, 2, rng)) profiles.push_back(g_profile(inst->full, p));
  // push_threshold is memoized; fill the memo outside the timed loop.
  benchmark::DoNotOptimize(push_threshold(p.t(), p.k(), 2));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_coefficient_chain(profiles[i++ % profiles.size()]).all_hold());
}
BENCHMARK(BM_CoefficientChain);

static void BM_BinomSwapRatio(benchmark::State& state) {
  std::int64_t n = 1;
  for (auto _ : state) benchmark::DoNotOptimize(binom_swap_ratio(1000 + (n++ % 9000), 2, 5));
}
BENCHMARK(BM_BinomSwapRatio);

static void BM_CountB(benchmark::State& state) {
  const Params p(static_cast<int>(state.range(0)), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_B(p));
}
BENCHMARK(BM_CountB)->Arg(101)->Arg(999);
BENCHMARK_MAIN();
