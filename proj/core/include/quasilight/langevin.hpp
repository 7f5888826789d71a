#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "quasilight/field.hpp"
#include "quasilight/medium.hpp"
#include "quasilight/rng.hpp"

namespace quasilight {

/// Noise variance of the exact Ornstein-Uhlenbeck update over dt:
/// Q*(1 - exp(-2*Re(A)*dt))/Re(A), with the Re(A) -> 0 limit 2*Q*dt.
double ou_noise_variance(const DriftDiffusion& dd, double dt);

/// Exact OU update alpha' = alpha*exp(-A*dt) + xi. The increment reproduces
/// the continuum force correlator at any dt, not just small dt.
std::complex<double> ou_step(std::complex<double> alpha, const DriftDiffusion& dd,
                             double dt, GaussianStream& rng);

/// Boundary values at z = 0: either one uniform amplitude for every cell and
/// time bin, or an explicit per-bin field series.
struct BoundaryInput {
  std::complex<double> uniform{0.0, 0.0};
  std::vector<LocalField> series;  // when non-empty, overrides `uniform`

  static BoundaryInput vacuum() { return {}; }
  static BoundaryInput constant(std::complex<double> value) { return {value, {}}; }
};

struct EnsembleConfig {
  int trajectories = 1;
  std::uint64_t seed = 1;
  int time_bins = 1;
  double step = 0.0;  // longitudinal step dz; 0 selects one cell per step
  std::vector<double> checkpoints;  // z values; final z appended if missing
  bool keep_fields = false;
  int threads = 1;
};

/// Ensemble moments at one propagation distance. Samples are the
/// (trajectory, time bin, cell) amplitudes; sem_* are standard errors of the
/// reported means.
struct MomentStats {
  double z = 0.0;
  std::complex<double> mean_alpha{0.0, 0.0};
  double mean_intensity = 0.0;   // <|alpha|^2>
  double sem_alpha_re = 0.0;
  double sem_alpha_im = 0.0;
  double sem_intensity = 0.0;
  double intensity_stddev = 0.0; // sample sigma of |alpha|^2
  std::int64_t samples = 0;
};

struct TrajectoryEnsemble {
  EnsembleConfig config;
  ModeGrid grid;
  std::vector<MomentStats> checkpoints;
  std::vector<LocalField> final_fields;  // per trajectory, when keep_fields
};

/// Integrates the 1D linear-medium Langevin equation through distance z in
/// the traveling frame t' = t - z/c, where each (time bin, cell)
/// characteristic obeys c d(alpha)/dz = -A alpha + f. Noise is independent
/// per cell, per bin, per trajectory; the per-step increment uses the exact
/// OU variance. Per-trajectory RNG substreams and trajectory-ordered
/// reduction make the result independent of the thread count.
TrajectoryEnsemble propagate_1d(const BoundaryInput& input, const DriftDiffusion& dd,
                                const ModeGrid& grid, double z,
                                const EnsembleConfig& config);

}  // namespace quasilight
