#include "quasilight/free_transfer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quasilight/transforms.hpp"

namespace quasilight {

namespace {
using Complex = std::complex<double>;

Complex phase(double arg) { return {std::cos(arg), std::sin(arg)}; }
}  // namespace

CouplingMatrix coupling_matrix(const ModeGrid& grid) {
  const int n = grid.cells();
  CouplingMatrix out{grid, Eigen::MatrixXcd(n, n)};
  for (int l = 0; l < n; ++l) {
    for (int lp = 0; lp <= l; ++lp) {
      const double d = grid.cell_position(l) - grid.cell_position(lp);
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k) {
        acc += grid.wavenumber(k) * phase(grid.wavenumber(k) * d);
      }
      const Complex value = grid.speed() / static_cast<double>(n) * acc;
      out.omega(l, lp) = value;
      out.omega(lp, l) = std::conj(value);
    }
  }
  return out;
}

LocalField evolve_free(const LocalField& f, double t) {
  if (t < 0.0) {
    throw std::domain_error("evolve_free: t must be non-negative");
  }
  CollectiveField c = to_collective(f);
  if (f.rep == Representation::full) {
    for (int k = 0; k < f.grid.cells(); ++k) {
      c.amps[k] *= phase(-f.grid.omega(k) * t);
    }
    return to_local(c);
  }
  // Envelope fields carry the free phases in the stored carrier time.
  return to_local_envelope(c, f.time + t);
}

LocalField advect_envelope(const LocalField& f, double t) {
  if (f.rep != Representation::envelope) {
    throw std::domain_error("advect_envelope: field is not in envelope representation");
  }
  const ModeGrid& g = f.grid;
  const int n = g.cells();
  if (f.amps.size() != n) {
    throw std::domain_error("field amplitude count does not match grid");
  }
  const double shift = g.speed() * t / g.cell();  // cells

  // Spectral circular shift of the cell sequence; integer shifts reduce to
  // an exact permutation, fractional ones to the band-limited interpolant.
  const double step = 2.0 * std::numbers::pi / n;
  Eigen::VectorXcd spectrum(n);
  for (int p = 0; p < n; ++p) {
    Complex acc = 0.0;
    for (int l = 0; l < n; ++l) {
      acc += f.amps[l] * phase(-step * p * l);
    }
    spectrum[p] = acc;
  }
  LocalField out{g, Eigen::VectorXcd(n), Representation::envelope, f.time + t};
  const double scale = 1.0 / n;
  for (int l = 0; l < n; ++l) {
    Complex acc = 0.0;
    for (int p = 0; p < n; ++p) {
      const int signed_p = (p < n / 2) ? p : p - n;
      acc += spectrum[p] * phase(step * signed_p * (l - shift));
    }
    out.amps[l] = scale * acc;
  }
  return out;
}

}  // namespace quasilight
