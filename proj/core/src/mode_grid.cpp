#include "quasilight/mode_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quasilight {

namespace {
constexpr double kPi = std::numbers::pi;

// sin(n*theta/2) / sin(theta/2) with the 0/0 lattice points resolved.
double dirichlet_ratio(int n, double theta) {
  const double den = std::sin(0.5 * theta);
  if (std::abs(den) < 1e-14) {
    return n * std::cos(0.5 * n * theta) / std::cos(0.5 * theta);
  }
  return std::sin(0.5 * n * theta) / den;
}
}  // namespace

ModeGrid::ModeGrid(double length, double cell, double band_center, double speed)
    : length_(length), cell_(cell), band_center_(band_center), speed_(speed) {
  if (!(length > 0.0) || !(cell > 0.0)) {
    throw std::invalid_argument("ModeGrid: L and a must be positive");
  }
  if (!(speed > 0.0)) {
    throw std::invalid_argument("ModeGrid: c must be positive");
  }
  const double ratio = length / cell;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * ratio || rounded < 2.0) {
    throw std::invalid_argument("ModeGrid: N = L/a must be an integer >= 2");
  }
  cells_ = static_cast<int>(rounded);
  if (cells_ % 2 != 0) {
    throw std::invalid_argument("ModeGrid: N = L/a must be even");
  }
}

double ModeGrid::delta_k() const { return 2.0 * kPi / length_; }

double ModeGrid::bandwidth() const { return speed_ / cell_; }

double ModeGrid::carrier_omega() const { return speed_ * band_center_; }

double ModeGrid::wavenumber(int i) const {
  if (i < 0 || i >= cells_) {
    throw std::domain_error("ModeGrid::wavenumber: index out of range");
  }
  return band_center_ + (i - 0.5 * cells_ + 0.5) * delta_k();
}

double ModeGrid::omega(int i) const { return speed_ * wavenumber(i); }

double ModeGrid::cell_position(int n) const {
  if (n < 0 || n >= cells_) {
    throw std::domain_error("ModeGrid::cell_position: index out of range");
  }
  return n * cell_;
}

double ModeGrid::scaled_delta(double tau) const {
  const double dnu = bandwidth();
  return (dnu / cells_) * dirichlet_ratio(cells_, 2.0 * kPi * tau * dnu / cells_);
}

std::complex<double> wannier_value(const ModeGrid& grid, int cell, double x) {
  if (cell < 0 || cell >= grid.cells()) {
    throw std::domain_error("wannier_value: invalid cell index");
  }
  if (!(x >= 0.0 && x < grid.length())) {
    throw std::domain_error("wannier_value: x outside [0, L)");
  }
  const double u = x - grid.cell_position(cell);
  const double packet =
      dirichlet_ratio(grid.cells(), grid.delta_k() * u) /
      std::sqrt(static_cast<double>(grid.cells()) * grid.length());
  const double carrier = grid.band_center() * u;
  return packet * std::complex<double>(std::cos(carrier), std::sin(carrier));
}

}  // namespace quasilight
