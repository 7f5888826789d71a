#include <benchmark/benchmark.h>

#include <numbers>

#include "quasilight/langevin.hpp"

using namespace quasilight;

namespace {

void BM_OuStep(benchmark::State& state) {
  DriftDiffusion dd{{0.3, 0.2}, 0.4};
  GaussianStream rng(1, 0);
  std::complex<double> alpha{1.0, 0.0};
  for (auto _ : state) {
    alpha = ou_step(alpha, dd, 0.1, rng);
    benchmark::DoNotOptimize(alpha);
  }
}
BENCHMARK(BM_OuStep);

void BM_Propagate1d(benchmark::State& state) {
  ModeGrid grid(8.0, 1.0, 2.0 * std::numbers::pi);
  DriftDiffusion dd{{0.3, 0.2}, 0.4};
  EnsembleConfig config;
  config.trajectories = static_cast<int>(state.range(0));
  config.seed = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        propagate_1d(BoundaryInput::constant({1.0, 0.0}), dd, grid, 4.0, config));
  }
}
BENCHMARK(BM_Propagate1d)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
