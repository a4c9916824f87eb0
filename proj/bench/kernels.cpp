// Serial reference vs OpenMP kernels: Weyl sweep, windowed homology, trial batches.
#include <benchmark/benchmark.h>

#include <random>

#include "hecke/app/trials.hpp"
#include "hecke/hochschild/homology.hpp"
#include "hecke/weyl/weyl.hpp"

using namespace hecke;

namespace {

weyl::TorusPointS bench_point() {
  std::mt19937_64 rng(1);
  return app::random_s_point(rng);
}

void BM_WeylSweepSerial(benchmark::State& st) {
  const auto s = bench_point();
  for (auto _ : st) benchmark::DoNotOptimize(weyl::invariance_violations_serial(s));
}

void BM_WeylSweepParallel(benchmark::State& st) {
  const auto s = bench_point();
  for (auto _ : st) benchmark::DoNotOptimize(weyl::invariance_violations(s));
}

void BM_HomologySerial(benchmark::State& st) {
  const auto w = hochschild::Window::make(Rational(3, 2), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(hochschild::window_homology_serial(w, hochschild::Twist::twisted).dims);
}

void BM_HomologyParallel(benchmark::State& st) {
  const auto w = hochschild::Window::make(Rational(3, 2), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(hochschild::window_homology(w, hochschild::Twist::twisted).dims);
}

void BM_VerifyBatchSerial(benchmark::State& st) {
  const auto ts = app::random_tuples(static_cast<int>(st.range(0)), 5);
  for (auto _ : st) benchmark::DoNotOptimize(app::verify_batch_serial(ts, 5).size());
}

void BM_VerifyBatchParallel(benchmark::State& st) {
  const auto ts = app::random_tuples(static_cast<int>(st.range(0)), 5);
  for (auto _ : st) benchmark::DoNotOptimize(app::verify_batch(ts, 5).size());
}

}  // namespace

BENCHMARK(BM_WeylSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeylSweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomologySerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomologyParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyBatchSerial)->Arg(2)->Iterations(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyBatchParallel)->Arg(2)->Iterations(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
