#include "quasilight/medium.hpp"

#include <stdexcept>

namespace quasilight {

std::complex<double> susceptibility(const MediumParams& p, double omega) {
  if (!(p.gamma > 0.0)) {
    throw std::domain_error("susceptibility: gamma must be positive");
  }
  return p.d2 / std::complex<double>(p.omega0 - omega, -p.gamma);
}

DriftDiffusion drift_diffusion(const MediumParams& p, const ModeGrid& grid) {
  if (p.n1 < 0.0 || p.n2 < 0.0) {
    throw std::domain_error("drift_diffusion: populations must be non-negative");
  }
  const double edge =
      p.volume == MediumParams::Volume::cell ? grid.cell() : grid.length();
  const double volume = edge * edge * edge;
  const double eps_m = grid.carrier_omega() / (2.0 * p.epsilon0 * volume);
  const std::complex<double> kappa = susceptibility(p, grid.carrier_omega());
  DriftDiffusion dd;
  dd.drift = {eps_m * (p.n1 - p.n2) * kappa.imag(),
              -eps_m * (p.n1 + p.n2) * kappa.real()};
  dd.diffusion = eps_m * p.n2 * kappa.imag();
  return dd;
}

}  // namespace quasilight
