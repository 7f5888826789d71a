#include <benchmark/benchmark.h>

#include "quasilight/paraxial.hpp"

using namespace quasilight;

namespace {

void BM_ParaxialStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  TransverseGrid grid(n, n, 1.0, 1.0);
  TransverseField f{grid, Eigen::VectorXcd(grid.samples()), 0.0};
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const double r2 = grid.x(ix) * grid.x(ix) + grid.y(iy) * grid.y(iy);
      f.amps[static_cast<Eigen::Index>(iy) * n + ix] = std::exp(-r2 / 64.0);
    }
  }
  DriftDiffusion dd{{0.05, 0.1}, 0.2};
  ParaxialPropagator prop(grid, 8.0, 1.0, dd, {1.0, 1.0, true});
  GaussianStream rng(2, 0);
  for (auto _ : state) {
    prop.step(f, &rng);
    benchmark::DoNotOptimize(f.amps.data());
  }
}
BENCHMARK(BM_ParaxialStep)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_WCorrelator(benchmark::State& state) {
  ModeGrid grid(8.0, 1.0, 6.283185307179586);
  DriftDiffusion dd{{0.0, 0.0}, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        w_correlator(grid, dd, 30.0, 6.0, 0.5, 0.0, 2.0, 0.0625, 1e-4));
  }
}
BENCHMARK(BM_WCorrelator)->Unit(benchmark::kMillisecond);

}  // namespace
