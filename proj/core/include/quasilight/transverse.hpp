#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>

namespace quasilight {

/// Transverse sampling for quasioptical propagation. Sample counts must be
/// powers of two; `radius` selects the cylindrical medium (noise support),
/// absent means transversely unbounded.
struct TransverseGrid {
  int nx = 0;
  int ny = 0;
  double dx = 0.0;
  double dy = 0.0;
  std::optional<double> radius;

  TransverseGrid() = default;
  TransverseGrid(int nx_, int ny_, double dx_, double dy_,
                 std::optional<double> radius_ = std::nullopt);

  int samples() const { return nx * ny; }
  double extent_x() const { return nx * dx; }
  double extent_y() const { return ny * dy; }
  double sample_area() const { return dx * dy; }
  // Signed coordinates centered on the grid.
  double x(int ix) const { return (ix - nx / 2) * dx; }
  double y(int iy) const { return (iy - ny / 2) * dy; }
  // Signed spatial frequencies of FFT bin indices.
  double kx(int ix) const;
  double ky(int iy) const;

  bool operator==(const TransverseGrid&) const = default;
};

/// Complex samples of alpha_m(z, s, t') at fixed z and retarded time,
/// row-major (index = iy*nx + ix).
struct TransverseField {
  TransverseGrid grid;
  Eigen::VectorXcd amps;
  double z = 0.0;

  double power() const { return amps.squaredNorm() * grid.sample_area(); }
};

}  // namespace quasilight
