#include "discordkit/hotsax.hpp"
#include "discordkit/hst.hpp"
#include "discordkit/synthetic.hpp"

#include <benchmark/benchmark.h>

using namespace discordkit;

namespace {

// range(0): length, range(1): noise amplitude in thousandths.
TimeSeries series_for(const benchmark::State& state) {
  return gen_sine_noise({static_cast<std::size_t>(state.range(0)),
                         static_cast<double>(state.range(1)) / 1000.0, 1});
}

constexpr SearchParams kParams{.window = 120, .segments = 4, .alphabet = 4, .discords = 1, .seed = 1};

}  // namespace

static void BM_Hst(benchmark::State& state) {
  const auto ts = series_for(state);
  const auto stats = compute_stats(ts, kParams.window);
  const auto index = build_index(ts, stats, kParams);
  std::uint64_t calls = 0;
  for (auto _ : state) {
    DistanceCounter counter;
    Rng rng(kParams.seed);
    benchmark::DoNotOptimize(hst_discords(ts, stats, index, kParams, counter, rng));
    calls = counter.calls();
  }
  state.counters["cps"] = static_cast<double>(calls) / static_cast<double>(stats.size());
}
BENCHMARK(BM_Hst)->Args({20000, 1})->Args({20000, 500})->Args({20000, 10000})
    ->Unit(benchmark::kMillisecond);

static void BM_HotSax(benchmark::State& state) {
  const auto ts = series_for(state);
  const auto stats = compute_stats(ts, kParams.window);
  const auto index = build_index(ts, stats, kParams);
  std::uint64_t calls = 0;
  for (auto _ : state) {
    DistanceCounter counter;
    Rng rng(kParams.seed);
    benchmark::DoNotOptimize(hotsax_discords(ts, stats, index, kParams, counter, rng));
    calls = counter.calls();
  }
  state.counters["cps"] = static_cast<double>(calls) / static_cast<double>(stats.size());
}
BENCHMARK(BM_HotSax)->Args({20000, 1})->Args({20000, 500})->Args({20000, 10000})
    ->Unit(benchmark::kMillisecond);
