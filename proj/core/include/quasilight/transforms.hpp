#pragma once

#include <Eigen/Dense>

#include "quasilight/field.hpp"
#include "quasilight/mode_grid.hpp"

namespace quasilight {

/// Unitary change-of-basis matrix C with rows indexed by cell l and columns
/// by band wave number k (ascending): C(l, k) = exp(-i*k*l)/sqrt(N).
Eigen::MatrixXcd transform_coefficients(const ModeGrid& grid);

/// alpha_m(l) = sum_k conj(C(l,k)) alpha_k. Returns a full-representation
/// snapshot.
LocalField to_local(const CollectiveField& f);

/// Envelope variant: A_m(l) = (1/sqrt(N)) sum_k alpha_k
/// exp(-i(w_k - w_m)*t + i(k - m)*l), with t stored on the result.
LocalField to_local_envelope(const CollectiveField& f, double time);

/// Exact inverse of to_local / to_local_envelope (uses the stored time for
/// envelope fields).
CollectiveField to_collective(const LocalField& f);

}  // namespace quasilight
