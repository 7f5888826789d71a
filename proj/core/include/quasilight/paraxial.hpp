#pragma once

#include <complex>
#include <memory>
#include <optional>

#include "quasilight/fft.hpp"
#include "quasilight/medium.hpp"
#include "quasilight/mode_grid.hpp"
#include "quasilight/rng.hpp"
#include "quasilight/transverse.hpp"

namespace quasilight {

/// Fresnel Green function U(z1 s1 | z s) =
///   -i m / (2 pi (z - z1)) * exp(i m |s - s1|^2 / (2 (z - z1))).
/// Requires z > z1.
std::complex<double> fresnel_kernel(double m, double z1, double z,
                                    const Eigen::Vector2d& s1,
                                    const Eigen::Vector2d& s);

/// Stochastic source injection scale: the white-noise increment per sample
/// has variance 2 Q dz a^2 / (c dx dy), masked to |s| <= R for a cylinder.
struct ParaxialNoiseConfig {
  double cell = 1.0;   // a
  double speed = 1.0;  // c
  bool enabled = true;
};

class ParaxialPropagator {
public:
  /// Prepares transforms and the spectral diffraction multiplier for a fixed
  /// step dz (split-step with half-step drift on both sides).
  ParaxialPropagator(const TransverseGrid& grid, double carrier_m, double dz,
                     const DriftDiffusion& dd,
                     const ParaxialNoiseConfig& noise = {});

  /// One split-step update. rng may be null when the noise term vanishes.
  void step(TransverseField& field, GaussianStream* rng) const;

  double dz() const { return dz_; }

private:
  TransverseGrid grid_;
  double carrier_m_;
  double dz_;
  DriftDiffusion dd_;
  ParaxialNoiseConfig noise_;
  std::complex<double> half_drift_;
  double noise_sigma2_ = 0.0;
  Eigen::VectorXcd diffraction_;  // spectral multiplier
  Eigen::VectorXd mask_;          // cylinder indicator (empty when unbounded)
  std::shared_ptr<Fft2d> fft_;
};

/// Fraction of spectral power in the outer 10% band of spatial frequencies.
/// Deterministic fields must keep this below ~1e-6 to be resolved; white
/// noise legitimately fills the whole band.
double nyquist_edge_fraction(const TransverseField& f);

/// Convenience wrapper matching the one-shot operation signature.
TransverseField paraxial_step(const TransverseField& f, double dz, double carrier_m,
                              const DriftDiffusion& dd,
                              const ParaxialNoiseConfig& noise, GaussianStream* rng);

/// Transverse correlation of the accumulated stochastic source.
/// Unbounded medium: delta-correlated (`delta` set, weight 1, zero away from
/// s = 0). Cylinder of radius R:
///   D = m R / (2 pi dz |s|) * J1(m |s| R / dz) * exp(-i m s^2 / (2 dz)).
struct TransverseNoiseCorrelation {
  bool delta = false;
  std::complex<double> value{0.0, 0.0};
};

TransverseNoiseCorrelation noise_correlation_D(double carrier_m, double dz, double s,
                                               std::optional<double> radius);

/// Two-point correlator of W(z, s, t): (2/c^2) Q a^3 delta_a(tau) *
/// integral_0^z exp(-(A + A*)(z - z1)/c) D(z - z1, s) dz1, evaluated by
/// adaptive quadrature. For the unbounded medium the delta(s) weight is
/// spread over one sample cell of area `cell_area`.
std::complex<double> w_correlator(const ModeGrid& grid, const DriftDiffusion& dd,
                                  double carrier_m, double z, double s, double tau,
                                  std::optional<double> radius, double cell_area,
                                  double tol = 1e-8);

}  // namespace quasilight
