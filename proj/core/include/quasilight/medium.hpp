#pragma once

#include <complex>

#include "quasilight/mode_grid.hpp"

namespace quasilight {

/// Two-level medium constants. Populations are fixed parameters; saturation
/// is out of scope.
struct MediumParams {
  double d2 = 1.0;      // |d|^2
  double omega0 = 0.0;  // atomic transition frequency
  double gamma = 1.0;   // transverse decay rate, > 0
  double n1 = 0.0;      // lower-level population, >= 0
  double n2 = 0.0;      // upper-level population, >= 0
  double epsilon0 = 1.0;

  // Normalization volume entering epsilon_m: the full box L^3 or the local
  // cell a^3.
  enum class Volume { box, cell };
  Volume volume = Volume::box;
};

/// kappa(w) = |d|^2 / (omega0 - w - i*gamma).
std::complex<double> susceptibility(const MediumParams& p, double omega);

/// Complex drift and real diffusion of the linear-medium Langevin equations,
/// in the band approximation A(k) ~ A(m), Q(k) ~ Q(m).
struct DriftDiffusion {
  std::complex<double> drift{0.0, 0.0};  // A
  double diffusion = 0.0;                // Q >= 0
};

DriftDiffusion drift_diffusion(const MediumParams& p, const ModeGrid& grid);

}  // namespace quasilight
