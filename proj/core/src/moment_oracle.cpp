#include "quasilight/moment_oracle.hpp"

#include <boost/numeric/odeint.hpp>
#include <array>
#include <stdexcept>

namespace quasilight {

namespace {
using State = std::array<double, 3>;  // Re<alpha>, Im<alpha>, <|alpha|^2>
}

MomentCurve moment_oracle(const DriftDiffusion& dd, std::span<const double> points,
                          std::complex<double> mean0, double intensity0,
                          double speed) {
  if (points.empty()) return {};
  if (!(speed > 0.0)) {
    throw std::domain_error("moment_oracle: speed must be positive");
  }
  const double a_re = dd.drift.real() / speed;
  const double a_im = dd.drift.imag() / speed;
  const double q = dd.diffusion / speed;

  auto rhs = [&](const State& x, State& dxds, double /*s*/) {
    dxds[0] = -(a_re * x[0] - a_im * x[1]);
    dxds[1] = -(a_re * x[1] + a_im * x[0]);
    dxds[2] = -2.0 * a_re * x[2] + 2.0 * q;
  };

  MomentCurve curve;
  curve.span.assign(points.begin(), points.end());
  curve.mean.reserve(points.size());
  curve.intensity.reserve(points.size());

  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled<ode::runge_kutta_cash_karp54<State>>(1e-10, 1e-10);

  State x{mean0.real(), mean0.imag(), intensity0};
  double s = 0.0;
  for (double point : curve.span) {
    if (point < s) {
      throw std::domain_error("moment_oracle: span points must be ascending");
    }
    if (point > s) {
      ode::integrate_adaptive(stepper, rhs, x, s, point, (point - s) / 64.0);
      s = point;
    }
    curve.mean.emplace_back(x[0], x[1]);
    curve.intensity.push_back(x[2]);
  }
  return curve;
}

}  // namespace quasilight
