#pragma once

#include <complex>

namespace quasilight {

/// One-dimensional mode geometry: the normalization length L split into
/// N = L/a cells, carrying one band of N plane waves around the carrier m.
///
/// Wave numbers are stored at k_j = m + (j + 1/2)*2*pi/L for j = -N/2..N/2-1,
/// so the band offsets are symmetric about the carrier and lie strictly
/// inside [m - pi/a, m + pi/a). N must be even.
class ModeGrid {
public:
  ModeGrid(double length, double cell, double band_center, double speed = 1.0);

  double length() const { return length_; }        // L
  double cell() const { return cell_; }            // a
  int cells() const { return cells_; }             // N
  double band_center() const { return band_center_; }  // m
  double speed() const { return speed_; }          // c

  double delta_k() const;                      // 2*pi/L
  double bandwidth() const;                    // c/a
  double carrier_omega() const;                // c*m
  double wavenumber(int i) const;              // i-th band wave number, ascending
  double omega(int i) const;                   // c*wavenumber(i)
  double cell_position(int n) const;           // l = n*a

  /// Band-limited temporal delta: (bandwidth/N) * sin(pi*tau*bandwidth) /
  /// sin(pi*tau*bandwidth/N). Removable singularities are evaluated by the
  /// L'Hopital branch, so scaled_delta(0) == bandwidth() exactly.
  double scaled_delta(double tau) const;

  bool operator==(const ModeGrid&) const = default;

private:
  double length_;
  double cell_;
  double band_center_;
  double speed_;
  int cells_;
};

/// Wannier packet w_m(x - l) for the cell with index `cell`, evaluated at
/// x in [0, L). The geometric band sum is evaluated in closed form.
std::complex<double> wannier_value(const ModeGrid& grid, int cell, double x);

}  // namespace quasilight
