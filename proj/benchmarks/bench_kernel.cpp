#include <benchmark/benchmark.h>

#include "chtilde/laurent_oracle.hpp"
#include "chtilde/multiset_cone.hpp"
#include "chtilde/recurrence_engine.hpp"
#include "chtilde/sampling.hpp"
#include "chtilde/tilde_ring.hpp"

namespace {

using namespace chtilde;

void BM_MulRandom(benchmark::State& state) {
  sampling::Rng rng(42);
  const auto span = static_cast<std::int64_t>(state.range(0));
  const TildeElement a = sampling::random_tilde(rng, -span, span, 3);
  const TildeElement b = sampling::random_tilde(rng, -span, span, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulRandom)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_W1Random(benchmark::State& state) {
  sampling::Rng rng(7);
  const TildeElement g1 = sampling::random_tilde(rng);
  const TildeElement g2 = sampling::random_tilde(rng);
  const TildeElement g3 = sampling::random_tilde(rng);
  for (auto _ : state) benchmark::DoNotOptimize(w1(g1, g2, g3));
}
BENCHMARK(BM_W1Random);

void BM_Msum(benchmark::State& state) {
  const IntegerMultiset m = interval(0, 2 * state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(msum(m, m));
}
BENCHMARK(BM_Msum)->Range(8, 512);

// Fresh engine each iteration, so this times the full recurrence to depth n.
void BM_LeadingRaw(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RecurrenceEngine engine;
    benchmark::DoNotOptimize(engine.e0_raw(n, 0));
  }
}
BENCHMARK(BM_LeadingRaw)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_PenultimateRaw(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RecurrenceEngine engine;
    benchmark::DoNotOptimize(engine.e1_raw(n, -1));
  }
}
BENCHMARK(BM_PenultimateRaw)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_PenultimateClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RecurrenceEngine engine;
    benchmark::DoNotOptimize(engine.e1_closed(n));
  }
}
BENCHMARK(BM_PenultimateClosed)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_OracleEval(benchmark::State& state) {
  RecurrenceEngine engine;
  const TildeElement& e = engine.e0_raw(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(eval(e));
}
BENCHMARK(BM_OracleEval);

}  // namespace

BENCHMARK_MAIN();
