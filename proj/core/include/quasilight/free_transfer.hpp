#pragma once

#include <Eigen/Dense>

#include "quasilight/field.hpp"
#include "quasilight/mode_grid.hpp"

namespace quasilight {

/// Inter-cell coupling Omega_m(l, l') = (c/N) sum_k k exp(ik(l - l')).
/// Hermitian; diagonal entries equal c*m exactly for the symmetric band.
struct CouplingMatrix {
  ModeGrid grid;
  Eigen::MatrixXcd omega;
};

CouplingMatrix coupling_matrix(const ModeGrid& grid);

/// Exact free evolution by duration t: collective amplitudes pick up
/// exp(-i*w_k*t) (full snapshots), or the stored envelope time advances.
/// Equals the matrix exponential of -i*Omega*t applied to the local vector.
LocalField evolve_free(const LocalField& f, double t);

/// Circular shift of an envelope by c*t/a cells, with band-limited
/// interpolation for non-integer shifts. For the linear dispersion law this
/// matches evolve_free up to a global carrier phase.
LocalField advect_envelope(const LocalField& f, double t);

}  // namespace quasilight
