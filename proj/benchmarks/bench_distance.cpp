#include "discordkit/sax.hpp"
#include "discordkit/series.hpp"
#include "discordkit/synthetic.hpp"

#include <benchmark/benchmark.h>

using namespace discordkit;

static void BM_Distance(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto ts = gen_random_walk(20000, 1);
  const auto stats = compute_stats(ts, s);
  const ZNormDistance distance(ts, stats, s);
  DistanceCounter counter;
  const std::size_t n = stats.size();
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t j = (i + n / 2) % n;
    if (!is_self_match(i, j, s)) benchmark::DoNotOptimize(distance(i, j, counter));
    i = (i + 37) % n;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(counter.calls()));
}
BENCHMARK(BM_Distance)->Arg(32)->Arg(128)->Arg(512);

static void BM_Stats(benchmark::State& state) {
  const auto ts = gen_random_walk(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(compute_stats(ts, 120));
}
BENCHMARK(BM_Stats)->Arg(20000)->Arg(200000);

static void BM_SaxIndex(benchmark::State& state) {
  const auto ts = gen_sine_noise({static_cast<std::size_t>(state.range(0)), 0.5, 1});
  const SearchParams params{.window = 120, .segments = 4, .alphabet = 4, .discords = 1, .seed = 1};
  const auto stats = compute_stats(ts, 120);
  for (auto _ : state) benchmark::DoNotOptimize(build_index(ts, stats, params));
}
BENCHMARK(BM_SaxIndex)->Arg(20000);
