// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include <spatent/analysis.hpp>
#include <spatent/sampling.hpp>
#include <spatent/spatial_modes.hpp>

namespace {

using namespace spatent;

void BM_SymplecticEigenvalues(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<CovarianceMatrix4> cms;
  for (int i = 0; i < 256; ++i) cms.push_back(random_physical_cm(rng).cm);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        symplectic_eigenvalues(invariants(cms[i++ & 255])));
  }
}
BENCHMARK(BM_SymplecticEigenvalues);

void BM_AssembleCm(benchmark::State& state) {
  const ThermalFieldConfig cfg;
  const DetectorProfile profile;
  const auto [r, q] = place_pair(0.1, 0.05, cfg);
  TruncationSpec trunc;
  trunc.l_max = static_cast<int>(state.range(0));
  const auto pair = prepare_mode_pair(r, q, profile, trunc, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_cm(pair.r, pair.q, cfg, trunc));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AssembleCm)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_RunSweep(benchmark::State& state) {
  const ThermalFieldConfig cfg;
  SweepSpec spec;
  for (int i = 0; i < 20; ++i) spec.separations.push_back(0.8 * i / 19.0);
  for (int j = 0; j < 20; ++j) {
    spec.temperatures.push_back(std::pow(10.0, -2.0 + 5.0 * j / 19.0));
  }
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, cfg));
}
BENCHMARK(BM_RunSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
