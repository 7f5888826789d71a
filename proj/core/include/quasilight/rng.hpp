#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace quasilight {

/// Deterministic per-trajectory Gaussian stream. Substreams are derived from
/// (master seed, stream index) by splitmix64 scrambling, so trajectories can
/// be integrated in parallel while every stream stays a pure function of the
/// pair. The normal variates are produced by a fixed Box-Muller recipe, not
/// std::normal_distribution, to keep byte-identical reruns portable.
class GaussianStream {
public:
  GaussianStream(std::uint64_t master_seed, std::uint64_t stream_index);

  double normal();

  /// Circular complex Gaussian with <|xi|^2> = variance, <xi^2> = 0.
  std::complex<double> complex_normal(double variance);

  std::uint64_t raw() { return engine_(); }

private:
  double uniform_open();  // (0, 1]

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace quasilight
