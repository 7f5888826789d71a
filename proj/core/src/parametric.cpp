#include "quasilight/parametric.hpp"

#include <cmath>
#include <stdexcept>

namespace quasilight {

namespace {

using Complex = std::complex<double>;

struct Derivative {
  Complex d1, d2;
};

Derivative rhs(const ConjugatePair& p, Complex coupling, double delta, double z) {
  const Complex rot = coupling * std::polar(1.0, delta * z);
  return {Complex(0.0, -1.0) * rot * std::conj(p.alpha2),
          Complex(0.0, -1.0) * rot * std::conj(p.alpha1)};
}

}  // namespace

double motion_integral(const ConjugatePair& p) {
  return std::norm(p.alpha1) - std::norm(p.alpha2);
}

ConjugatePair pair_step(const ConjugatePair& p, const ParametricCoupling& c,
                        double z, double dz) {
  if (!(dz > 0.0)) {
    throw std::domain_error("pair_step: dz must be positive");
  }
  const Complex coupling = c.effective();
  const double rate = std::abs(coupling);
  if (rate == 0.0) return p;

  if (c.delta == 0.0) {
    // Exact hyperbolic rotation: alpha1' = alpha1 ch - i e^{i theta}
    // conj(alpha2) sh, and symmetrically.
    const double ch = std::cosh(rate * dz);
    const double sh = std::sinh(rate * dz);
    const Complex mix = Complex(0.0, -1.0) * (coupling / rate) * sh;
    return {p.alpha1 * ch + mix * std::conj(p.alpha2),
            p.alpha2 * ch + mix * std::conj(p.alpha1)};
  }

  const Derivative k1 = rhs(p, coupling, c.delta, z);
  const ConjugatePair p2{p.alpha1 + 0.5 * dz * k1.d1, p.alpha2 + 0.5 * dz * k1.d2};
  const Derivative k2 = rhs(p2, coupling, c.delta, z + 0.5 * dz);
  const ConjugatePair p3{p.alpha1 + 0.5 * dz * k2.d1, p.alpha2 + 0.5 * dz * k2.d2};
  const Derivative k3 = rhs(p3, coupling, c.delta, z + 0.5 * dz);
  const ConjugatePair p4{p.alpha1 + dz * k3.d1, p.alpha2 + dz * k3.d2};
  const Derivative k4 = rhs(p4, coupling, c.delta, z + dz);
  const double w = dz / 6.0;
  return {p.alpha1 + w * (k1.d1 + 2.0 * k2.d1 + 2.0 * k3.d1 + k4.d1),
          p.alpha2 + w * (k1.d2 + 2.0 * k2.d2 + 2.0 * k3.d2 + k4.d2)};
}

ConservationReport conservation_check(std::span<const double> z_points,
                                      std::span<const std::vector<double>> integral_series,
                                      double tolerance) {
  if (z_points.empty() || integral_series.empty()) {
    throw std::domain_error("conservation_check: empty input");
  }
  ConservationReport report;
  report.tolerance = tolerance;

  const std::size_t n_z = z_points.size();
  const double m = static_cast<double>(integral_series.size());
  double sum_in = 0.0, sum_out = 0.0, sum2_in = 0.0, sum2_out = 0.0;
  double sum_out2 = 0.0, sum_out4 = 0.0;
  for (std::size_t traj = 0; traj < integral_series.size(); ++traj) {
    const std::vector<double>& series = integral_series[traj];
    if (series.size() != n_z) {
      throw std::domain_error("conservation_check: ragged trajectory series");
    }
    for (std::size_t i = 0; i < n_z; ++i) {
      const double drift = std::abs(series[i] - series[0]);
      if (drift > report.max_drift) {
        report.max_drift = drift;
        report.max_drift_z = z_points[i];
        report.max_drift_trajectory = static_cast<int>(traj);
      }
    }
    const double i_in = series.front();
    const double i_out = series.back();
    sum_in += i_in;
    sum_out += i_out;
    sum2_in += i_in * i_in;
    sum2_out += i_out * i_out;
    sum_out2 += i_out * i_out;
    sum_out4 += i_out * i_out * i_out * i_out;
  }
  report.mean_in = sum_in / m;
  report.mean_out = sum_out / m;
  report.second_in = sum2_in / m;
  report.second_out = sum2_out / m;
  const double var_mean = std::max(0.0, sum_out2 / m - report.mean_out * report.mean_out);
  const double var_second =
      std::max(0.0, sum_out4 / m - report.second_out * report.second_out);
  report.sem_mean = std::sqrt(var_mean / m);
  report.sem_second = std::sqrt(var_second / m);
  report.ok = report.max_drift <= tolerance;
  return report;
}

}  // namespace quasilight
