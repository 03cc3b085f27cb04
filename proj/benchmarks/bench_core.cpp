#include <benchmark/benchmark.h>

#include "nsopt/optimizer.hpp"
#include "nsopt/partition.hpp"
#include "nsopt/rates.hpp"
#include "nsopt/schur_weyl.hpp"

using namespace nsopt;

static void BM_Multiplicity(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Partition p({2 * k, k, k / 2}, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiplicity(p));
  }
}
BENCHMARK(BM_Multiplicity)->Arg(20)->Arg(100)->Arg(400);

static void BM_EnumeratePartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_partition(n, 4, [&](std::span<const int>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count_partitions(n, 4, 1u << 30)));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(40)->Arg(80);

static void BM_MaximizeBrute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximize_brute(3, n));
  }
}
BENCHMARK(BM_MaximizeBrute)->Arg(60)->Arg(150);

static void BM_QutritClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximize_qutrit_closed(n));
  }
}
BENCHMARK(BM_QutritClosed)->Arg(50)->Arg(500)->Arg(5000);

static void BM_BalancedRateSeries(benchmark::State& state) {
  const int kmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(balanced_rate_series(3, kmax));
  }
}
BENCHMARK(BM_BalancedRateSeries)->Arg(30)->Arg(100);

BENCHMARK_MAIN();
