#pragma once

#include <vector>

namespace quasilight {

struct DetectionConfig {
  double q = 1.0;          // detector quantum efficiency in [0, 1]
  double bandwidth = 1.0;  // scheme bandwidth (the local-mode width c/a)
  double omega_max = 1.0;  // analysis band
  int omega_points = 64;

  double eta() const { return q * bandwidth; }  // registration rate
};

/// Ensemble of sampled per-mode intensity records n1(t), n2(t) at uniform
/// spacing dt; the difference current is I = n1 - n2.
struct IntensityEnsemble {
  double dt = 1.0;
  std::vector<std::vector<double>> n1;  // [trajectory][sample]
  std::vector<std::vector<double>> n2;
};

struct SpectrumResult {
  std::vector<double> omega;
  std::vector<double> K;      // sampled fluctuation spectrum of I
  std::vector<double> K_N;    // K - (n1 + n2)/bandwidth
  std::vector<double> i2;     // eta (n1 + n2) + eta^2 K_N
  std::vector<double> sem_K;  // per-bin standard error over trajectories
  double n1_mean = 0.0;
  double n2_mean = 0.0;
  bool stationary = true;
  double drift_sigma = 0.0;  // drift-test statistic, in standard errors
};

/// Hann-windowed averaged periodogram of the difference current across the
/// ensemble, with the normal-ordering correction
/// K_N(Omega) = K(Omega) - <n1 + n2>/bandwidth. Frequencies snap to the DFT
/// bins of the record length. Non-stationary input is flagged by a drift
/// test on the two record halves.
SpectrumResult difference_spectrum(const IntensityEnsemble& ensemble,
                                   const DetectionConfig& cfg);

/// i2(Omega) = eta (n1 + n2) + eta^2 K_N(Omega). Requires the physicality
/// bound K_N >= -(n1 + n2)/bandwidth.
std::vector<double> photocurrent_spectrum(const std::vector<double>& K_N, double n1,
                                          double n2, const DetectionConfig& cfg);

/// Closed-form input-output relation for conjugated mode pairs:
/// i2(z) = bw <n1+n2> q(1-q) + bw <n10+n20> q(q-1) + i2(0).
std::vector<double> output_noise(const std::vector<double>& input_i2, double n10,
                                 double n20, double n1, double n2,
                                 const DetectionConfig& cfg);

}  // namespace quasilight
