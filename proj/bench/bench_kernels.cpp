// Serial reference vs OpenMP for each data-parallel kernel.
#include <benchmark/benchmark.h>

#include "poincare/catalog.hpp"
#include "poincare/kernels.hpp"

using namespace poincare;

namespace {

const kernels::Backend kBackends[] = {kernels::Backend::serial, kernels::Backend::openmp};

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_SampleUniform(benchmark::State& state) {
  const TrigPoly t(get_example(ExampleName::R5, make_rational(-1, 8)).p());
  const auto b = kBackends[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sample_uniform(t, 1 << 18, b));
  set_label(state);
}

void BM_NewtonBatch(benchmark::State& state) {
  const PlanarPolySystem s = get_example(ExampleName::R5, make_rational(-1, 8));
  const NewtonField f(s);
  std::vector<Vec2> seeds;
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) seeds.push_back({-3.0 + 6.0 * i / 63, -3.0 + 6.0 * j / 63});
  const auto b = kBackends[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(kernels::newton_batch(f, seeds, {}, b));
  set_label(state);
}

void BM_IntegrateBatch(benchmark::State& state) {
  const PlanarPolySystem s = get_example(ExampleName::R4);
  PortraitSpec spec;
  const auto seeds = portrait_seeds(spec);
  const auto b = kBackends[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(kernels::integrate_batch(s, seeds, spec, b));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_SampleUniform)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NewtonBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegrateBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
