#include "quasilight/transverse.hpp"

#include <numbers>
#include <stdexcept>

namespace quasilight {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

TransverseGrid::TransverseGrid(int nx_, int ny_, double dx_, double dy_,
                               std::optional<double> radius_)
    : nx(nx_), ny(ny_), dx(dx_), dy(dy_), radius(radius_) {
  if (!power_of_two(nx) || !power_of_two(ny)) {
    throw std::invalid_argument("TransverseGrid: Nx and Ny must be powers of two");
  }
  if (!(dx > 0.0) || !(dy > 0.0)) {
    throw std::invalid_argument("TransverseGrid: dx and dy must be positive");
  }
  if (radius && !(*radius > 0.0)) {
    throw std::invalid_argument("TransverseGrid: cylinder radius must be positive");
  }
}

double TransverseGrid::kx(int ix) const {
  const int signed_i = (ix <= nx / 2) ? ix : ix - nx;
  return 2.0 * std::numbers::pi * signed_i / extent_x();
}

double TransverseGrid::ky(int iy) const {
  const int signed_i = (iy <= ny / 2) ? iy : iy - ny;
  return 2.0 * std::numbers::pi * signed_i / extent_y();
}

}  // namespace quasilight
