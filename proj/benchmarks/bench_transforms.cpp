#include <benchmark/benchmark.h>

#include <numbers>

#include "quasilight/free_transfer.hpp"
#include "quasilight/rng.hpp"
#include "quasilight/transforms.hpp"

using namespace quasilight;

namespace {

CollectiveField random_field(int n, std::uint64_t seed) {
  ModeGrid grid(static_cast<double>(n), 1.0, 2.0 * std::numbers::pi);
  GaussianStream rng(seed, 0);
  CollectiveField f{grid, Eigen::VectorXcd(n)};
  for (int i = 0; i < n; ++i) f.amps[i] = rng.complex_normal(1.0);
  return f;
}

void BM_ToLocal(benchmark::State& state) {
  const CollectiveField f = random_field(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_local(f));
  }
}
BENCHMARK(BM_ToLocal)->Arg(64)->Arg(256)->Arg(1024);

void BM_EvolveFree(benchmark::State& state) {
  const LocalField f = to_local(random_field(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_free(f, 0.5));
  }
}
BENCHMARK(BM_EvolveFree)->Arg(64)->Arg(256);

void BM_CouplingMatrix(benchmark::State& state) {
  ModeGrid grid(static_cast<double>(state.range(0)), 1.0, 2.0 * std::numbers::pi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupling_matrix(grid));
  }
}
BENCHMARK(BM_CouplingMatrix)->Arg(32)->Arg(128);

}  // namespace
