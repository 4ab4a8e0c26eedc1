#include <benchmark/benchmark.h>

#include "pfshuffle/closedforms.hpp"
#include "pfshuffle/enumerator.hpp"
#include "pfshuffle/recursions.hpp"

using namespace pfshuffle;

namespace {

void BM_ParkqEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(parkq_poly(Family{n / 2, n - n / 2, std::nullopt, std::nullopt}, {threads}));
}
BENCHMARK(BM_ParkqEnumerate)->ArgsProduct({{6, 8, 10}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_ParkqtEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parkqt_poly(Family{n / 2, n - n / 2, std::nullopt, std::nullopt}, {1}));
}
BENCHMARK(BM_ParkqtEnumerate)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ShuffleEnumerator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_enumerator(ShuffleSpec({1, n - 1}), {1}));
}
BENCHMARK(BM_ShuffleEnumerator)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

// The Pascal table is memoized; the first call pays for the fill.
void BM_QBinomCached(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qbinom(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(qbinom(n, n / 2));
}
BENCHMARK(BM_QBinomCached)->RangeMultiplier(2)->Range(8, 64);

void BM_ClosedFormWolf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thm_wolf(n, n));
}
BENCHMARK(BM_ClosedFormWolf)->DenseRange(5, 20, 5);

void BM_RecursionColdMemo(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_recursion_memo();
    benchmark::DoNotOptimize(recur_parkq_s(n, n, 0));
  }
}
BENCHMARK(BM_RecursionColdMemo)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_RecursionQTColdMemo(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_recursion_memo();
    benchmark::DoNotOptimize(recur_parkqt_s(n, n, 0));
  }
}
BENCHMARK(BM_RecursionQTColdMemo)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
