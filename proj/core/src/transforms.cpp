#include "quasilight/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace quasilight {

namespace {

using Complex = std::complex<double>;

Complex phase(double arg) { return {std::cos(arg), std::sin(arg)}; }

void require_consistent(const LocalField& f) {
  if (f.amps.size() != f.grid.cells()) {
    throw std::domain_error("field amplitude count does not match grid");
  }
}

void require_consistent(const CollectiveField& f) {
  if (f.amps.size() != f.grid.cells()) {
    throw std::domain_error("field amplitude count does not match grid");
  }
}

}  // namespace

Eigen::MatrixXcd transform_coefficients(const ModeGrid& grid) {
  const int n = grid.cells();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd c(n, n);
  for (int l = 0; l < n; ++l) {
    const double pos = grid.cell_position(l);
    for (int k = 0; k < n; ++k) {
      c(l, k) = scale * phase(-grid.wavenumber(k) * pos);
    }
  }
  return c;
}

LocalField to_local(const CollectiveField& f) {
  require_consistent(f);
  const ModeGrid& g = f.grid;
  const int n = g.cells();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  LocalField out{g, Eigen::VectorXcd(n), Representation::full, 0.0};
  for (int l = 0; l < n; ++l) {
    const double pos = g.cell_position(l);
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) {
      acc += f.amps[k] * phase(g.wavenumber(k) * pos);
    }
    out.amps[l] = scale * acc;
  }
  return out;
}

LocalField to_local_envelope(const CollectiveField& f, double time) {
  require_consistent(f);
  const ModeGrid& g = f.grid;
  const int n = g.cells();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  LocalField out{g, Eigen::VectorXcd(n), Representation::envelope, time};
  for (int l = 0; l < n; ++l) {
    const double pos = g.cell_position(l);
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const double detuning = g.omega(k) - g.carrier_omega();
      const double offset = g.wavenumber(k) - g.band_center();
      acc += f.amps[k] * phase(-detuning * time + offset * pos);
    }
    out.amps[l] = scale * acc;
  }
  return out;
}

CollectiveField to_collective(const LocalField& f) {
  require_consistent(f);
  const ModeGrid& g = f.grid;
  const int n = g.cells();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CollectiveField out{g, Eigen::VectorXcd(n)};
  for (int k = 0; k < n; ++k) {
    Complex acc = 0.0;
    if (f.rep == Representation::full) {
      for (int l = 0; l < n; ++l) {
        acc += f.amps[l] * phase(-g.wavenumber(k) * g.cell_position(l));
      }
    } else {
      const double detuning = g.omega(k) - g.carrier_omega();
      const double offset = g.wavenumber(k) - g.band_center();
      for (int l = 0; l < n; ++l) {
        acc += f.amps[l] * phase(detuning * f.time - offset * g.cell_position(l));
      }
    }
    out.amps[k] = scale * acc;
  }
  return out;
}

}  // namespace quasilight
