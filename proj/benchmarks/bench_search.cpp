#include <benchmark/benchmark.h>

#include "dedekind/search.hpp"

static void BM_RunSearch(benchmark::State& state) {
  dedekind::SearchConfig config;
  config.q = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t sums = 0;
  for (auto _ : state) {
    const auto report = dedekind::run_search(config);
    sums = report.sums_computed;
    benchmark::DoNotOptimize(report.complete);
  }
  state.counters["sums"] = static_cast<double>(sums);
  state.counters["sums_per_s"] =
      benchmark::Counter(static_cast<double>(sums) * state.iterations(), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_RunSearch)->Arg(7)->Arg(17)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);

static void BM_RootPairEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t n = 0;
    dedekind::RootPairStream stream(60, static_cast<std::uint64_t>(state.range(0)));
    while (stream.next()) ++n;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_RootPairEnumeration)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);
