#include <benchmark/benchmark.h>

#include <random>

#include "locality/locality.hpp"

using namespace locality;

namespace {

Trace uniform_trace(Time n, Time m) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<DataId> pick(1, static_cast<DataId>(m));
  std::vector<DataId> ids(static_cast<std::size_t>(n));
  for (auto& id : ids) id = pick(rng);
  return Trace(std::move(ids));
}

void BM_ReuseDistance(benchmark::State& state) {
  const Trace t = uniform_trace(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reuse_distance_sequence(t));
  state.SetItemsProcessed(state.iterations() * t.size());
}
BENCHMARK(BM_ReuseDistance)->Args({100'000, 1'000})->Args({1'000'000, 10'000});

void BM_FootprintIncremental(benchmark::State& state) {
  const Trace t = uniform_trace(state.range(0), state.range(1));
  const auto rt = build_histogram(reuse_time_sequence(t));
  const auto firsts = t.first_accesses();
  const auto lasts = t.last_accesses();
  for (auto _ : state) benchmark::DoNotOptimize(fp_incremental(rt, firsts, lasts, state.range(2)));
}
BENCHMARK(BM_FootprintIncremental)
    ->Args({100'000, 1'000, 1'000})
    ->Args({1'000'000, 10'000, 10'000})
    ->Args({1'000'000, 10'000, 1'000'000});

void BM_FootprintEndToEnd(benchmark::State& state) {
  const Trace t = uniform_trace(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fp_incremental(t, state.range(1)));
  state.SetItemsProcessed(state.iterations() * t.size());
}
BENCHMARK(BM_FootprintEndToEnd)->Args({1'000'000, 10'000})->Unit(benchmark::kMillisecond);

void BM_LruSimulate(benchmark::State& state) {
  const Trace t = uniform_trace(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lru_simulate_detailed(t));
  state.SetItemsProcessed(state.iterations() * t.size());
}
BENCHMARK(BM_LruSimulate)->Args({100'000, 1'000})->Args({1'000'000, 10'000});

}  // namespace
BENCHMARK_MAIN();
