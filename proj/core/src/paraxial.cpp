#include "quasilight/paraxial.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "quasilight/errors.hpp"

namespace quasilight {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

Complex phase(double arg) { return {std::cos(arg), std::sin(arg)}; }

double expm1_ratio(double x) {
  if (std::abs(x) < 1e-12) return 1.0 - 0.5 * x;
  return -std::expm1(-x) / x;
}

}  // namespace

Complex fresnel_kernel(double m, double z1, double z, const Eigen::Vector2d& s1,
                       const Eigen::Vector2d& s) {
  const double dz = z - z1;
  if (!(dz > 0.0)) {
    throw std::domain_error("fresnel_kernel: requires z > z1");
  }
  const double r2 = (s - s1).squaredNorm();
  return Complex(0.0, -1.0) * (m / (2.0 * kPi * dz)) * phase(m * r2 / (2.0 * dz));
}

double nyquist_edge_fraction(const TransverseField& f) {
  const TransverseGrid& g = f.grid;
  Eigen::VectorXcd spectrum = f.amps;
  Fft2d fft(g.nx, g.ny);
  fft.forward(spectrum.data());
  const double kx_edge = 0.9 * kPi / g.dx;
  const double ky_edge = 0.9 * kPi / g.dy;
  double edge = 0.0;
  double total = 0.0;
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      const double p = std::norm(spectrum[static_cast<Eigen::Index>(iy) * g.nx + ix]);
      total += p;
      if (std::abs(g.kx(ix)) > kx_edge || std::abs(g.ky(iy)) > ky_edge) edge += p;
    }
  }
  if (total == 0.0) return 0.0;
  return edge / total;
}

ParaxialPropagator::ParaxialPropagator(const TransverseGrid& grid, double carrier_m,
                                       double dz, const DriftDiffusion& dd,
                                       const ParaxialNoiseConfig& noise)
    : grid_(grid), carrier_m_(carrier_m), dz_(dz), dd_(dd), noise_(noise) {
  if (!(dz > 0.0)) {
    throw std::domain_error("ParaxialPropagator: dz must be positive");
  }
  if (!(carrier_m > 0.0)) {
    throw std::domain_error("ParaxialPropagator: carrier m must be positive");
  }
  half_drift_ = std::exp(-dd_.drift * (0.5 * dz_ / noise_.speed));
  noise_sigma2_ = 2.0 * dd_.diffusion * dz_ * noise_.cell * noise_.cell /
                  (noise_.speed * grid_.sample_area());
  diffraction_.resize(grid_.samples());
  for (int iy = 0; iy < grid_.ny; ++iy) {
    for (int ix = 0; ix < grid_.nx; ++ix) {
      const double k2 = grid_.kx(ix) * grid_.kx(ix) + grid_.ky(iy) * grid_.ky(iy);
      diffraction_[static_cast<Eigen::Index>(iy) * grid_.nx + ix] =
          phase(-k2 * dz_ / (2.0 * carrier_m_));
    }
  }
  if (grid_.radius) {
    mask_.resize(grid_.samples());
    const double r2 = *grid_.radius * *grid_.radius;
    for (int iy = 0; iy < grid_.ny; ++iy) {
      for (int ix = 0; ix < grid_.nx; ++ix) {
        const double x = grid_.x(ix);
        const double y = grid_.y(iy);
        mask_[static_cast<Eigen::Index>(iy) * grid_.nx + ix] =
            (x * x + y * y <= r2) ? 1.0 : 0.0;
      }
    }
  }
  fft_ = std::make_shared<Fft2d>(grid_.nx, grid_.ny);
}

void ParaxialPropagator::step(TransverseField& field, GaussianStream* rng) const {
  if (!(field.grid == grid_)) {
    throw std::domain_error("ParaxialPropagator::step: grid mismatch");
  }
  const bool noisy = noise_.enabled && dd_.diffusion > 0.0;
  if (!noisy) {
    const double edge = nyquist_edge_fraction(field);
    if (edge > 1e-6) {
      std::ostringstream msg;
      msg << "paraxial_step: under-resolved transverse grid, Nyquist edge power "
             "fraction "
          << edge << " exceeds 1e-6";
      throw PreconditionError(msg.str());
    }
  }

  field.amps *= half_drift_;
  fft_->forward(field.amps.data());
  field.amps.array() *= diffraction_.array();
  fft_->inverse(field.amps.data());
  field.amps *= half_drift_;

  if (noisy) {
    if (rng == nullptr) {
      throw std::domain_error("ParaxialPropagator::step: rng required for noisy step");
    }
    for (Eigen::Index i = 0; i < field.amps.size(); ++i) {
      if (mask_.size() != 0 && mask_[i] == 0.0) continue;
      field.amps[i] += rng->complex_normal(noise_sigma2_);
    }
  }
  field.z += dz_;
}

TransverseField paraxial_step(const TransverseField& f, double dz, double carrier_m,
                              const DriftDiffusion& dd,
                              const ParaxialNoiseConfig& noise, GaussianStream* rng) {
  ParaxialPropagator prop(f.grid, carrier_m, dz, dd, noise);
  TransverseField out = f;
  prop.step(out, rng);
  return out;
}

TransverseNoiseCorrelation noise_correlation_D(double carrier_m, double dz, double s,
                                               std::optional<double> radius) {
  if (!(dz > 0.0)) {
    throw std::domain_error("noise_correlation_D: requires dz > 0");
  }
  if (!radius) {
    return {true, {1.0, 0.0}};
  }
  const double r = *radius;
  if (!(r > 0.0)) {
    throw std::domain_error("noise_correlation_D: radius must be positive");
  }
  const Complex chirp = phase(-carrier_m * s * s / (2.0 * dz));
  const double x = carrier_m * s * r / dz;
  if (x < 1e-8) {
    // J1(x) ~ x/2
    return {false, carrier_m * carrier_m * r * r / (4.0 * kPi * dz * dz) * chirp};
  }
  const double amp = carrier_m * r / (2.0 * kPi * dz * s) * std::cyl_bessel_j(1.0, x);
  return {false, amp * chirp};
}

Complex w_correlator(const ModeGrid& grid, const DriftDiffusion& dd, double carrier_m,
                     double z, double s, double tau, std::optional<double> radius,
                     double cell_area, double tol) {
  if (!(z > 0.0)) {
    throw std::domain_error("w_correlator: requires z > 0");
  }
  const double c = grid.speed();
  const double a = grid.cell();
  const double decay = 2.0 * dd.drift.real() / c;
  const double prefactor =
      (2.0 / (c * c)) * dd.diffusion * a * a * a * grid.scaled_delta(tau);

  if (!radius) {
    if (s != 0.0) return {0.0, 0.0};
    // Constant integrand 1/cell_area damped by the drift.
    return prefactor / cell_area * z * expm1_ratio(decay * z);
  }

  if (!(s > 0.0)) {
    throw std::domain_error(
        "w_correlator: the continuum cylinder correlator diverges on axis; "
        "evaluate at s > 0");
  }
  const double r = *radius;
  // Substitute psi = 1/delta: the integrand oscillates uniformly in psi with
  // amplitude ~ psi^{-3/2}, so the quadrature window and truncation error are
  // controlled. integrand(psi) = D(1/psi, s) exp(-decay/psi) / psi^2.
  auto integrand = [&](double psi) -> Complex {
    const Complex d = noise_correlation_D(carrier_m, 1.0 / psi, s, radius).value;
    return std::exp(-decay / psi) * d / (psi * psi);
  };
  const double scale = std::max(
      std::abs(noise_correlation_D(carrier_m, 0.5 * z, s, radius).value) * z, 1e-300);
  const double tol_abs = tol * scale;
  // Tail beyond Psi: |integrand| <= C psi^{-3/2} oscillating at frequency
  // >= freq, so the integration-by-parts bound is C Psi^{-3/2} / freq.
  const double amp = (carrier_m * r / (2.0 * kPi * s)) *
                     std::sqrt(2.0 / (kPi * carrier_m * s * r));
  double freq = carrier_m * s * (r - 0.5 * s);
  if (!(freq > 0.0)) freq = 0.1 * carrier_m * s * r;
  double psi_max = std::pow(amp / (freq * tol_abs), 2.0 / 3.0);
  psi_max = std::min(std::max(psi_max, 4.0 / z), 1e5);

  using boost::math::quadrature::gauss_kronrod;
  const Complex body =
      gauss_kronrod<double, 61>::integrate(integrand, 1.0 / z, psi_max, 15, tol);
  return prefactor * body;
}

}  // namespace quasilight
