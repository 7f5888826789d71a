#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "quasilight/mode_grid.hpp"
#include "quasilight/rng.hpp"
#include "quasilight/transforms.hpp"

using namespace quasilight;
using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST_SUITE("mode_grid") {

TEST_CASE("grid construction and band layout") {
  ModeGrid grid(8.0, 1.0, 2.0 * kPi);
  CHECK(grid.cells() == 8);
  CHECK(grid.delta_k() == doctest::Approx(2.0 * kPi / 8.0).epsilon(1e-15));
  CHECK(grid.bandwidth() == doctest::Approx(1.0));
  // All band wave numbers strictly inside [m - pi/a, m + pi/a), spaced by dk.
  for (int i = 0; i < grid.cells(); ++i) {
    const double k = grid.wavenumber(i);
    CHECK(k >= grid.band_center() - kPi / grid.cell());
    CHECK(k < grid.band_center() + kPi / grid.cell());
    if (i > 0) {
      CHECK(k - grid.wavenumber(i - 1) == doctest::Approx(grid.delta_k()).epsilon(1e-14));
    }
  }
  // Symmetric offsets sum to zero.
  double offset_sum = 0.0;
  for (int i = 0; i < grid.cells(); ++i) {
    offset_sum += grid.wavenumber(i) - grid.band_center();
  }
  CHECK(std::abs(offset_sum) < 1e-12);

  CHECK_THROWS_AS(ModeGrid(7.0, 2.0, 1.0), std::invalid_argument);  // non-integer N
  CHECK_THROWS_AS(ModeGrid(6.0, 2.0, 1.0), std::invalid_argument);  // odd N
  CHECK_THROWS_AS(ModeGrid(-8.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("wannier value at the cell center is 1/sqrt(a)") {
  ModeGrid grid(8.0, 1.0, 2.0 * kPi);
  for (int cell : {0, 3, 7}) {
    const Complex w = wannier_value(grid, cell, grid.cell_position(cell));
    CHECK(w.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(w.imag()) < 1e-14);
  }
  // a != 1 scales as 1/sqrt(a)
  ModeGrid fine(8.0, 0.5, 2.0 * kPi);
  const Complex w = wannier_value(fine, 4, fine.cell_position(4));
  CHECK(std::abs(w) == doctest::Approx(1.0 / std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("wannier closed form matches the direct band summation") {
  ModeGrid grid(8.0, 1.0, 2.0 * kPi);
  GaussianStream rng(11, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const int cell = static_cast<int>(rng.raw() % 8);
    const double x = 8.0 * (static_cast<double>(rng.raw() >> 11) * 0x1.0p-53);
    const Complex closed = wannier_value(grid, cell, x);
    const Complex direct = oracles::direct_wannier(grid, cell, x);
    CHECK(std::abs(closed - direct) < 1e-12);
  }
  // Half-period point: magnitude bounded by the on-site value.
  const double at_center = std::abs(oracles::direct_wannier(grid, 2, 2.0));
  const double at_half = std::abs(oracles::direct_wannier(grid, 2, 2.0 + 4.0));
  CHECK(at_half <= at_center);
  CHECK(std::abs(wannier_value(grid, 2, 6.0)) == doctest::Approx(at_half).epsilon(1e-12));
}

TEST_CASE("wannier domain errors") {
  ModeGrid grid(8.0, 1.0, 2.0 * kPi);
  CHECK_THROWS_AS(wannier_value(grid, -1, 0.5), std::domain_error);
  CHECK_THROWS_AS(wannier_value(grid, 8, 0.5), std::domain_error);
  CHECK_THROWS_AS(wannier_value(grid, 0, 8.0), std::domain_error);
  CHECK_THROWS_AS(wannier_value(grid, 0, -0.1), std::domain_error);
}

TEST_CASE("packet sum over cells reproduces the band kernel") {
  // sum_l w(x - l) conj(w(x' - l)) = (1/L) sum_k exp(ik(x - x')), the
  // band-limited delta.
  ModeGrid grid(8.0, 1.0, 2.0 * kPi);
  const double x = 1.3, xp = 4.85;
  Complex lhs{0.0, 0.0};
  for (int l = 0; l < grid.cells(); ++l) {
    lhs += wannier_value(grid, l, x) * std::conj(wannier_value(grid, l, xp));
  }
  Complex rhs{0.0, 0.0};
  for (int i = 0; i < grid.cells(); ++i) {
    const double arg = grid.wavenumber(i) * (x - xp);
    rhs += Complex(std::cos(arg), std::sin(arg));
  }
  rhs /= grid.length();
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("gram matrix of packets is the identity") {
  ModeGrid grid(8.0, 1.0, 2.0 * kPi);
  const int n = grid.cells();
  const int samples = 4 * n;
  const double dx = grid.length() / samples;
  double off_max = 0.0, diag_dev = 0.0;
  for (int l = 0; l < n; ++l) {
    for (int lp = 0; lp < n; ++lp) {
      Complex acc{0.0, 0.0};
      for (int p = 0; p < samples; ++p) {
        const double x = (p + 0.5) * dx;
        acc += std::conj(wannier_value(grid, l, x)) * wannier_value(grid, lp, x);
      }
      acc *= dx;
      if (l == lp) {
        diag_dev = std::max(diag_dev, std::abs(acc - 1.0));
      } else {
        off_max = std::max(off_max, std::abs(acc));
      }
    }
  }
  CHECK(off_max < 1e-10);
  CHECK(diag_dev < 1e-10);
}

TEST_CASE("transform coefficients are unitary with the forced moduli") {
  ModeGrid two(2.0, 1.0, 4.0 * kPi);
  const Eigen::MatrixXcd c2 = transform_coefficients(two);
  for (int l = 0; l < 2; ++l) {
    for (int k = 0; k < 2; ++k) {
      CHECK(std::abs(c2(l, k)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    }
  }

  ModeGrid four(4.0, 1.0, 2.0 * kPi);
  const Eigen::MatrixXcd c4 = transform_coefficients(four);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(c4(0, k) - Complex(0.5, 0.0)) < 1e-14);
  }

  ModeGrid grid(16.0, 1.0, 2.0 * kPi);
  const Eigen::MatrixXcd c = transform_coefficients(grid);
  const Eigen::MatrixXcd gram = c * c.adjoint();
  CHECK((gram - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12);
  const Eigen::MatrixXcd gram2 = c.adjoint() * c;
  CHECK((gram2 - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12);

  // Norm preservation for random vectors.
  GaussianStream rng(3, 0);
  Eigen::VectorXcd v(16);
  for (int i = 0; i < 16; ++i) v[i] = rng.complex_normal(1.0);
  CHECK((c * v).norm() == doctest::Approx(v.norm()).epsilon(1e-13));
}

TEST_CASE("local/collective round trips and Parseval") {
  ModeGrid grid(16.0, 1.0, 2.0 * kPi);
  GaussianStream rng(7, 0);
  CollectiveField f{grid, Eigen::VectorXcd(16)};
  for (int i = 0; i < 16; ++i) f.amps[i] = rng.complex_normal(1.0);

  const LocalField local = to_local(f);
  const CollectiveField back = to_collective(local);
  CHECK((back.amps - f.amps).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(local.power() == doctest::Approx(f.power()).epsilon(1e-13));

  const LocalField env = to_local_envelope(f, 0.37);
  CHECK(env.time == doctest::Approx(0.37));
  const CollectiveField back_env = to_collective(env);
  CHECK((back_env.amps - f.amps).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(env.power() == doctest::Approx(f.power()).epsilon(1e-13));
}

TEST_CASE("single excited collective mode spreads uniformly") {
  ModeGrid grid(16.0, 1.0, 2.0 * kPi);
  const int k0 = 5;
  CollectiveField f{grid, Eigen::VectorXcd::Zero(16)};
  f.amps[k0] = 1.0;
  const LocalField local = to_local(f);
  for (int l = 0; l < 16; ++l) {
    CHECK(std::abs(local.amps[l]) == doctest::Approx(0.25).epsilon(1e-13));
    const double expected = grid.wavenumber(k0) * grid.cell_position(l);
    const Complex want = Complex(std::cos(expected), std::sin(expected)) * 0.25;
    CHECK(std::abs(local.amps[l] - want) < 1e-13);
  }
}

TEST_CASE("grid mismatch raises a domain error") {
  ModeGrid a(16.0, 1.0, 2.0 * kPi);
  ModeGrid b(8.0, 1.0, 2.0 * kPi);
  LocalField f{a, Eigen::VectorXcd::Zero(b.cells()), Representation::full, 0.0};
  CHECK_THROWS_AS(to_collective(f), std::domain_error);
}

TEST_CASE("scaled delta values and removable singularities") {
  ModeGrid grid(8.0, 1.0, 2.0 * kPi);
  const double dnu = grid.bandwidth();
  CHECK(grid.scaled_delta(0.0) == dnu);  // exact
  CHECK(std::abs(grid.scaled_delta(1.0 / dnu)) < 1e-12);

  // Direct band summation at tau = 0.5/dnu; the symmetric band makes the sum
  // real.
  const double tau = 0.5 / dnu;
  const Complex direct = oracles::direct_band_delta(grid, tau);
  CHECK(std::abs(direct.imag()) < 1e-12);
  CHECK(grid.scaled_delta(tau) == doctest::Approx(direct.real()).epsilon(1e-13));

  GaussianStream rng(5, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const double t = 4.0 * (static_cast<double>(rng.raw() >> 11) * 0x1.0p-53) - 2.0;
    const Complex d = oracles::direct_band_delta(grid, t);
    CHECK(grid.scaled_delta(t) == doctest::Approx(d.real()).epsilon(1e-11));
    // Even in tau; antiperiodic over N/dnu for even N (each band term gains
    // exp(i pi)), hence periodic over 2N/dnu.
    CHECK(grid.scaled_delta(-t) == doctest::Approx(grid.scaled_delta(t)).epsilon(1e-12));
    CHECK(grid.scaled_delta(t + grid.cells() / dnu) ==
          doctest::Approx(-grid.scaled_delta(t)).epsilon(1e-9));
    CHECK(grid.scaled_delta(t + 2.0 * grid.cells() / dnu) ==
          doctest::Approx(grid.scaled_delta(t)).epsilon(1e-9));
  }

  // Lattice points hit the 0/0 branch and return the limit; the antiperiod
  // flips the sign at N/dnu.
  CHECK(grid.scaled_delta(grid.cells() / dnu) == doctest::Approx(-dnu).epsilon(1e-12));
  CHECK(grid.scaled_delta(2.0 * grid.cells() / dnu) == doctest::Approx(dnu).epsilon(1e-12));
}

TEST_CASE("scaled delta integrates to one over a period") {
  for (double a : {1.0, 0.5}) {
    ModeGrid grid(8.0 * a, a, 2.0 * kPi / a);
    const double dnu = grid.bandwidth();
    double sum = 0.0;
    for (int j = 0; j < grid.cells(); ++j) {
      sum += grid.scaled_delta(j / dnu) / dnu;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

}  // TEST_SUITE
