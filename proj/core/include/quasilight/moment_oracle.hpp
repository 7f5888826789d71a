#pragma once

#include <complex>
#include <span>
#include <vector>

#include "quasilight/medium.hpp"

namespace quasilight {

struct MomentCurve {
  std::vector<double> span;                      // z (or t) values, ascending
  std::vector<std::complex<double>> mean;        // <alpha>
  std::vector<double> intensity;                 // <|alpha|^2>
};

/// Deterministic check of the stochastic engine: integrates the closed
/// first/second moment ODEs
///   d<alpha>/ds = -A <alpha>,  d<|alpha|^2>/ds = -2 Re(A) <|alpha|^2> + 2 Q
/// with an adaptive integrator (tolerance 1e-10), where s = z/speed (use
/// speed = 1 for a time span).
MomentCurve moment_oracle(const DriftDiffusion& dd, std::span<const double> points,
                          std::complex<double> mean0, double intensity0,
                          double speed = 1.0);

}  // namespace quasilight
