#include <benchmark/benchmark.h>

#include "advmatch/divide.hpp"
#include "advmatch/generators.hpp"
#include "advmatch/lr.hpp"
#include "advmatch/offline.hpp"

using namespace advmatch;

namespace {

Instance sample(std::int64_t n) {
  return gen_uniform(static_cast<std::size_t>(n), 0, 10.0 * static_cast<double>(n), 42, true);
}

}  // namespace

static void BM_MonotoneOptimal(benchmark::State& state) {
  const Instance inst = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monotone_optimal(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MonotoneOptimal)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_BruteForce(benchmark::State& state) {
  const Instance inst = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimal(inst));
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 10, 2);

static void BM_LrWithOracle(benchmark::State& state) {
  const Instance inst = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lr_run_with_oracle(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LrWithOracle)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_Divide(benchmark::State& state) {
  const Instance inst = sample(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(divide_run(inst, k, SubroutineKind::greedy));
}
BENCHMARK(BM_Divide)->Args({64, 1})->Args({64, 8})->Args({64, 64})->Args({256, 16});

static void BM_DivideAdviceEncode(benchmark::State& state) {
  const Instance inst = sample(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(encode_divide_advice(inst, k));
}
BENCHMARK(BM_DivideAdviceEncode)->Args({256, 16})->Args({1024, 32});
BENCHMARK_MAIN();
