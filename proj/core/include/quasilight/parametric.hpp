#pragma once

#include <complex>
#include <span>
#include <vector>

namespace quasilight {

/// Undepleted parametric / two-photon coupling between one conjugated mode
/// pair. The classical equations of motion in the traveling frame are
///   d(alpha1)/dz = -i G exp(i*Delta*z) conj(alpha2)
///   d(alpha2)/dz = -i G exp(i*Delta*z) conj(alpha1)
/// with G = g * exp(i*phi) * pump. For the two-photon case the pump stands
/// in for the classical atomic polarization parameter.
struct ParametricCoupling {
  double g = 0.0;      // coupling magnitude, >= 0
  double phi = 0.0;    // coupling phase
  double delta = 0.0;  // phase/frequency mismatch
  std::complex<double> pump{1.0, 0.0};

  std::complex<double> effective() const {
    return g * std::polar(1.0, phi) * pump;
  }
};

struct ConjugatePair {
  std::complex<double> alpha1{0.0, 0.0};
  std::complex<double> alpha2{0.0, 0.0};
};

/// n1 - n2 = |alpha1|^2 - |alpha2|^2, conserved along propagation.
double motion_integral(const ConjugatePair& p);

/// One integration step from z to z + dz. Uses the closed-form hyperbolic
/// rotation when delta == 0 and a classical RK4 step otherwise.
ConjugatePair pair_step(const ConjugatePair& p, const ParametricCoupling& c,
                        double z, double dz);

struct ConservationReport {
  bool ok = false;
  double tolerance = 0.0;
  double max_drift = 0.0;      // max |I(z) - I(0)| over trajectories and z
  double max_drift_z = 0.0;
  int max_drift_trajectory = -1;
  // Ensemble <I> and <I^2> at the first and last span point, with standard
  // errors of the final-point means.
  double mean_in = 0.0, mean_out = 0.0, sem_mean = 0.0;
  double second_in = 0.0, second_out = 0.0, sem_second = 0.0;
};

/// Checks I(z, t') = I(0, t') per trajectory (traveling-frame pointwise
/// conservation) and compares the ensemble moments <I>, <I^2> between the
/// first and last span point.
ConservationReport conservation_check(std::span<const double> z_points,
                                      std::span<const std::vector<double>> integral_series,
                                      double tolerance);

}  // namespace quasilight
