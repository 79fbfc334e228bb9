#include "multischur/fredholm.hpp"
#include "multischur/kernel.hpp"
#include "multischur/laurent.hpp"
#include "multischur/multicritical.hpp"
#include "multischur/sampler.hpp"

#include <benchmark/benchmark.h>

using namespace multischur;

static void BM_symbol_coeffs(benchmark::State& state) {
  const auto spec = o_params(2, static_cast<long>(state.range(0))).spec();
  for (auto _ : state) benchmark::DoNotOptimize(symbol_coeffs(spec, SymbolFamily::kappa, 4 * state.range(0) + 40));
}
BENCHMARK(BM_symbol_coeffs)->Arg(10)->Arg(100)->Arg(400);

static void BM_gap_probability(benchmark::State& state) {
  const auto params = o_params(2, static_cast<long>(state.range(0)));
  const DiscreteKernel kernel(params.spec());
  const int l = static_cast<int>(to_double(params.b) * state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gap_probability(kernel, l));
}
BENCHMARK(BM_gap_probability)->Arg(10)->Arg(100)->Arg(400);

static void BM_tracy_widom(benchmark::State& state) {
  const TracyWidom f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f(-1.0));
}
BENCHMARK(BM_tracy_widom)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_sampler(benchmark::State& state) {
  const auto params = o_params(1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(sample(params, state.range(0), 1));
}
BENCHMARK(BM_sampler)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
