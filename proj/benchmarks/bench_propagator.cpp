#include <benchmark/benchmark.h>

#include "qotto/cycle.hpp"
#include "qotto/disorder.hpp"
#include "qotto/evolution.hpp"

namespace {

const qotto::EngineParams kParams =
    qotto::EngineParams::from_lab_units(2.0, 3.6, 100.0, 0.2, 0.261, 0.99);

void BM_PropagatorLab(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qotto::propagator_lab(kParams, steps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PropagatorLab)->Arg(5000)->Arg(20000);

void BM_PropagatorRotating(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qotto::propagator_rotating(kParams, steps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PropagatorRotating)->Arg(5000)->Arg(20000);

void BM_Cycle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qotto::simulate_cycle(kParams));
}
BENCHMARK(BM_Cycle);

void BM_DisorderSample(benchmark::State& state) {
  qotto::DisorderSpec spec;
  spec.sigma = 0.05;
  spec.n_samples = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    spec.seed = seed++;
    benchmark::DoNotOptimize(qotto::quenched_efficiency(kParams, spec, {qotto::kDisorderSteps, 1}));
  }
}
BENCHMARK(BM_DisorderSample);

}  // namespace

BENCHMARK_MAIN();
