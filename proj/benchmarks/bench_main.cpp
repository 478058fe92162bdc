#include <benchmark/benchmark.h>

#include "sumprod/constructions.hpp"
#include "sumprod/elliptic.hpp"
#include "sumprod/expander.hpp"
#include "sumprod/random.hpp"
#include "sumprod/translates.hpp"

namespace sumprod {
namespace {

void BM_GroupMultiple(benchmark::State& state) {
  const EllipticCurve c(-63, 162);
  const CurvePoint p(7, 8);
  for (auto _ : state) benchmark::DoNotOptimize(group_mul(c, p, state.range(0)));
}
BENCHMARK(BM_GroupMultiple)->Arg(4)->Arg(16)->Arg(64);

void BM_PairTranslates(benchmark::State& state) {
  Integer a = 1;
  for (int i = 0; i < state.range(0); ++i) a *= 10;
  a += 7;
  for (auto _ : state) benchmark::DoNotOptimize(pair_translates(a, 0));
}
BENCHMARK(BM_PairTranslates)->Arg(6)->Arg(12)->Arg(18);

void BM_Divisors(benchmark::State& state) {
  const Integer n = 720720 * Integer(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(divisors(n));
}
BENCHMARK(BM_Divisors)->Arg(1)->Arg(1001)->Arg(999983);

void BM_CharSumMax(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto t = CounterRng(1, 0).subset(n, 64);
  for (auto _ : state) benchmark::DoNotOptimize(char_sum_max(n, t));
}
BENCHMARK(BM_CharSumMax)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_GreedyMatching(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(interval_matching_experiment(n, Rational(1, 10)));
}
BENCHMARK(BM_GreedyMatching)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_EulerChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(euler_chain(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EulerChain)->Arg(3)->Arg(6);

}  // namespace
}  // namespace sumprod

BENCHMARK_MAIN();
