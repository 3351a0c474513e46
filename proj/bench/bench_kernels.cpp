#include <benchmark/benchmark.h>

#include <random>

#include "sbt/suites.hpp"

namespace {

sbt::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? sbt::Exec::serial : sbt::Exec::parallel;
}

void BM_Multiply(benchmark::State& state) {
  const sbt::Exec exec = exec_of(state);
  const int n = static_cast<int>(state.range(1));
  std::mt19937_64 rng(7);
  const auto a = sbt::random_element(n, 12, rng);
  const auto b = sbt::random_element(n, 12, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.multiply(b, exec));
  }
}
BENCHMARK(BM_Multiply)->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_BuildLevel(benchmark::State& state) {
  const sbt::Exec exec = exec_of(state);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    sbt::TraceEngine engine;
    engine.build_level(n, exec);
    benchmark::DoNotOptimize(engine.table_size(n));
  }
}
BENCHMARK(BM_BuildLevel)->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_GradedTrace(benchmark::State& state) {
  const sbt::Exec exec = exec_of(state);
  const auto alpha = sbt::random_graded_word(3, 6, static_cast<int>(state.range(1)), 11);
  for (auto _ : state) {
    sbt::TraceEngine trace;
    sbt::GradedTraceEngine engine(trace);
    benchmark::DoNotOptimize(engine.graded_trace(alpha, exec));
  }
}
BENCHMARK(BM_GradedTrace)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
