#include <benchmark/benchmark.h>

#include "permq/permanent.hpp"
#include "permq/prob_poly.hpp"
#include "permq/term_dist.hpp"

using namespace permq;

static void BM_PermanentNaive(benchmark::State& state) {
  const auto m = BinaryMatrix::ones_minus_identity(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(permanent_naive(m));
  }
}
BENCHMARK(BM_PermanentNaive)->DenseRange(4, 9);

static void BM_PermanentRyser(benchmark::State& state) {
  const auto m = BinaryMatrix::ones_minus_identity(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(permanent_ryser(m));
  }
}
// 13 and 22 straddle the 64-bit / 128-bit / arbitrary-precision accumulator switches.
BENCHMARK(BM_PermanentRyser)->DenseRange(4, 9)->Arg(13)->Arg(14)->Arg(22)->Arg(23);

static void BM_BruteforceTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(e_table_bruteforce(Family::C, n));
  }
}
BENCHMARK(BM_BruteforceTable)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_ExactCounts(benchmark::State& state) {
  const auto family = static_cast<Family>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_counts(family, n));
  }
}
BENCHMARK(BM_ExactCounts)
    ->Args({static_cast<int>(Family::A), 3})
    ->Args({static_cast<int>(Family::A), 4})
    ->Args({static_cast<int>(Family::C), 4})
    ->Args({static_cast<int>(Family::C), 5})
    ->Unit(benchmark::kMillisecond);

static void BM_QEval(benchmark::State& state) {
  const auto model = make_approx_model(Family::A, static_cast<int>(state.range(0)));
  int step = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_eval(model, step / 100.0));
    step = step == 100 ? 0 : step + 1;
  }
}
BENCHMARK(BM_QEval)->Arg(5)->Arg(30);
BENCHMARK_MAIN();
