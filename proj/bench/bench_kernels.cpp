// Serial reference kernels against their OpenMP counterparts. Results are
// bit-identical (see the tests); only the wall clock differs.

#include <benchmark/benchmark.h>

#include <random>

#include "trm/spheres.hpp"
#include "trm/verify.hpp"

using namespace trm;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(max_threads()));
}

void BM_TraceS(benchmark::State& state) {
  TraceOpts o;
  o.samples = 10000;
  o.exec = exec_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_s_circle(Complex(0.3, 0.45), 0.5, o));
  }
  label(state);
}

void BM_BruteForceBatch(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  std::vector<std::pair<Point, Point>> pairs;
  for (int i = 0; i < 200; ++i) {
    pairs.emplace_back(Point::interior({u(rng), u(rng)}), Point::interior({u(rng), u(rng)}));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_s_batch(pairs, 20000, exec_of(state)));
  }
  label(state);
}

void BM_ConjectureSweep(benchmark::State& state) {
  ConjectureOpts o;
  o.grid_n = 8;
  o.trace_n = 500;
  o.exec = exec_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_conjecture(o));
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_TraceS)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjectureSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
