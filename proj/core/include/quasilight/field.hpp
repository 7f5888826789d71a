#pragma once

#include <Eigen/Dense>
#include <complex>

#include "quasilight/mode_grid.hpp"

namespace quasilight {

enum class Representation { full, envelope };

/// Per-wave-number amplitudes alpha_k, ordered by ascending k.
struct CollectiveField {
  ModeGrid grid;
  Eigen::VectorXcd amps;

  double power() const { return amps.squaredNorm(); }
};

/// Per-cell amplitudes. `full` holds alpha_m(l) snapshots; `envelope` holds
/// A_m(l) with the carrier exp(-i(w_k - w_m)t + i(k - m)l) stripped at the
/// stored time, so stripping and restoring use identical phase factors.
struct LocalField {
  ModeGrid grid;
  Eigen::VectorXcd amps;
  Representation rep = Representation::full;
  double time = 0.0;

  double power() const { return amps.squaredNorm(); }
};

}  // namespace quasilight
