#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "quasilight/langevin.hpp"
#include "quasilight/parametric.hpp"
#include "quasilight/rng.hpp"
#include "quasilight/spectra.hpp"

using namespace quasilight;
using Complex = std::complex<double>;

TEST_SUITE("spectra") {

TEST_CASE("detection config validation and the registration rate") {
  DetectionConfig cfg{0.75, 4.0, 2.0, 16};
  CHECK(cfg.eta() == doctest::Approx(3.0));
  DetectionConfig bad{1.5, 4.0, 2.0, 16};
  CHECK_THROWS_AS(photocurrent_spectrum({0.0}, 1.0, 1.0, bad), std::domain_error);
}

TEST_CASE("constant current has no fluctuation spectrum") {
  IntensityEnsemble ens;
  ens.dt = 0.5;
  for (int t = 0; t < 8; ++t) {
    ens.n1.push_back(std::vector<double>(128, 2.0));
    ens.n2.push_back(std::vector<double>(128, 0.5));
  }
  DetectionConfig cfg{1.0, 4.0, 3.0, 32};
  const SpectrumResult result = difference_spectrum(ens, cfg);
  CHECK(result.n1_mean == doctest::Approx(2.0));
  CHECK(result.n2_mean == doctest::Approx(0.5));
  CHECK(result.stationary);
  for (std::size_t i = 1; i < result.omega.size(); ++i) {
    CHECK(std::abs(result.K[i]) < 1e-18);
    CHECK(result.K_N[i] == doctest::Approx(-2.5 / cfg.bandwidth).epsilon(1e-12));
  }
}

TEST_CASE("point-mass vacuum ensemble gives K_N = 0") {
  IntensityEnsemble ens;
  ens.dt = 0.25;
  for (int t = 0; t < 4; ++t) {
    ens.n1.push_back(std::vector<double>(64, 0.0));
    ens.n2.push_back(std::vector<double>(64, 0.0));
  }
  DetectionConfig cfg{1.0, 4.0, 6.0, 16};
  const SpectrumResult result = difference_spectrum(ens, cfg);
  for (double kn : result.K_N) CHECK(kn == 0.0);
  for (double i2 : result.i2) CHECK(i2 == 0.0);
}

TEST_CASE("the spectrum result identity holds bit for bit") {
  IntensityEnsemble ens;
  ens.dt = 0.5;
  GaussianStream rng(10, 0);
  for (int t = 0; t < 6; ++t) {
    std::vector<double> a(64), b(64);
    for (auto& v : a) v = std::norm(rng.complex_normal(1.0));
    for (auto& v : b) v = std::norm(rng.complex_normal(0.5));
    ens.n1.push_back(a);
    ens.n2.push_back(b);
  }
  DetectionConfig cfg{0.6, 2.0, 4.0, 16};
  const SpectrumResult result = difference_spectrum(ens, cfg);
  const double eta = cfg.eta();
  const double total = result.n1_mean + result.n2_mean;
  for (std::size_t i = 0; i < result.K_N.size(); ++i) {
    CHECK(result.i2[i] == eta * total + eta * eta * result.K_N[i]);
  }
}

TEST_CASE("ou-driven intensity matches the expected windowed periodogram") {
  // Stationary complex OU; the intensity autocovariance is
  // sigma^4 rho^{2|k|} with rho = exp(-Re A dt), and the spectrum is a
  // Lorentzian of half width 2 Re A.
  DriftDiffusion dd{{0.25, 0.4}, 0.2};
  const double dt = 0.25;
  const int window = 2048;
  const int trajectories = 400;
  const double sigma2 = dd.diffusion / dd.drift.real();

  IntensityEnsemble ens;
  ens.dt = dt;
  ens.n1.resize(trajectories);
  ens.n2.resize(trajectories);
  for (int t = 0; t < trajectories; ++t) {
    GaussianStream rng(2024, t);
    Complex alpha{0.0, 0.0};
    for (int burn = 0; burn < 400; ++burn) alpha = ou_step(alpha, dd, dt, rng);
    ens.n1[t].reserve(window);
    ens.n2[t].assign(window, 0.0);
    for (int i = 0; i < window; ++i) {
      alpha = ou_step(alpha, dd, dt, rng);
      ens.n1[t].push_back(std::norm(alpha));
    }
  }

  DetectionConfig cfg{1.0, 4.0, 2.0, 40};
  const SpectrumResult result = difference_spectrum(ens, cfg);
  CHECK(result.stationary);
  CHECK(result.n1_mean == doctest::Approx(sigma2).epsilon(0.05));

  // Oracle: exact discrete autocovariance pushed through the same window.
  std::vector<double> cov(window);
  const double rho = std::exp(-dd.drift.real() * dt);
  for (int k = 0; k < window; ++k) {
    cov[k] = sigma2 * sigma2 * std::pow(rho, 2 * k);
  }
  std::vector<int> bins;
  for (double omega : result.omega) {
    bins.push_back(static_cast<int>(std::lround(omega * window * dt /
                                                (2.0 * std::numbers::pi))));
  }
  const std::vector<double> expected = oracles::expected_hann_periodogram(cov, dt, bins);

  int checked = 0;
  for (std::size_t i = 0; i < bins.size(); ++i) {
    CHECK(std::abs(result.K[i] - expected[i]) < 3.0 * result.sem_K[i] + 1e-12);
    ++checked;
  }
  CHECK(checked >= 20);

  // Lorentzian width: S(Omega) = 4 r sigma^4 / (4 r^2 + Omega^2) with
  // r = Re A, so the half-power point sits at Omega = 2 Re A.
  const double s0 = sigma2 * sigma2 / dd.drift.real();
  const double half_width = 2.0 * dd.drift.real();
  std::size_t near = 0;
  for (std::size_t i = 1; i < result.omega.size(); ++i) {
    if (std::abs(result.omega[i] - half_width) < std::abs(result.omega[near] - half_width))
      near = i;
  }
  const double lorentz = s0 * half_width * half_width /
                         (half_width * half_width + result.omega[near] * result.omega[near]);
  CHECK(lorentz == doctest::Approx(0.5 * s0).epsilon(0.05));
  CHECK(result.K[near] == doctest::Approx(lorentz).epsilon(0.2));
}

TEST_CASE("drift test flags non-stationary records") {
  IntensityEnsemble ens;
  ens.dt = 1.0;
  for (int t = 0; t < 8; ++t) {
    std::vector<double> ramp(256);
    for (int i = 0; i < 256; ++i) ramp[i] = 0.01 * i;
    ens.n1.push_back(ramp);
    ens.n2.push_back(std::vector<double>(256, 0.0));
  }
  DetectionConfig cfg{1.0, 1.0, 1.0, 8};
  const SpectrumResult result = difference_spectrum(ens, cfg);
  CHECK(!result.stationary);
  CHECK(result.drift_sigma > 5.0);
}

TEST_CASE("photocurrent spectrum limits") {
  DetectionConfig cfg{1.0, 4.0, 1.0, 4};
  const std::vector<double> zero(5, 0.0);

  SUBCASE("coherent level is flat shot noise") {
    const auto i2 = photocurrent_spectrum(zero, 1.5, 0.5, cfg);
    for (double v : i2) CHECK(v == doctest::Approx(cfg.eta() * 2.0));
  }
  SUBCASE("full suppression at the physicality floor with q = 1") {
    const std::vector<double> floor(5, -2.0 / cfg.bandwidth);
    const auto i2 = photocurrent_spectrum(floor, 1.5, 0.5, cfg);
    for (double v : i2) CHECK(std::abs(v) < 1e-12);
  }
  SUBCASE("no detection, no current") {
    DetectionConfig blind{0.0, 4.0, 1.0, 4};
    const auto i2 = photocurrent_spectrum(zero, 1.5, 0.5, blind);
    for (double v : i2) CHECK(v == 0.0);
  }
  SUBCASE("physicality violation is rejected with the margin") {
    const std::vector<double> bad(5, -2.0 / cfg.bandwidth - 1e-6);
    CHECK_THROWS_AS(photocurrent_spectrum(bad, 1.5, 0.5, cfg), std::domain_error);
  }
}

TEST_CASE("input-output relation: equality, squeezing preservation, cancellation") {
  DetectionConfig cfg{0.7, 4.0, 1.0, 4};
  const double n10 = 0.8, n20 = 0.6;

  SUBCASE("ideal detectors copy the input spectrum") {
    DetectionConfig ideal{1.0, 4.0, 1.0, 4};
    const std::vector<double> input{0.1, 0.2, 0.3};
    const auto out = output_noise(input, n10, n20, 5.0, 7.0, ideal);
    for (std::size_t i = 0; i < input.size(); ++i) {
      CHECK(std::abs(out[i] - input[i]) < 1e-12);
    }
  }
  SUBCASE("the (1-q) suppression factor survives any gain") {
    const double in_total = n10 + n20;
    const std::vector<double> squeezed{cfg.bandwidth * cfg.q * in_total * (1.0 - cfg.q)};
    for (double gz : {0.0, 0.5, 1.0, 2.0}) {
      const double n1 = n10 * std::cosh(gz) * std::cosh(gz) +
                        (n20 + 1.0) * std::sinh(gz) * std::sinh(gz);
      const double n2 = n20 * std::cosh(gz) * std::cosh(gz) +
                        (n10 + 1.0) * std::sinh(gz) * std::sinh(gz);
      const auto out = output_noise(squeezed, n10, n20, n1, n2, cfg);
      const double suppression = out[0] / (cfg.bandwidth * cfg.q * (n1 + n2));
      CHECK(suppression == doctest::Approx(1.0 - cfg.q).epsilon(1e-12));
    }
  }
  SUBCASE("transparent media leave any input untouched") {
    const std::vector<double> input{0.4, 0.9};
    const auto out = output_noise(input, n10, n20, n10, n20, cfg);
    for (std::size_t i = 0; i < input.size(); ++i) CHECK(out[i] == input[i]);
  }
}

TEST_CASE("ordering-corrected spectra are conserved through parametric gain") {
  // Per-characteristic conservation of I makes the sampled spectrum at z
  // equal the input one, so K_N(z) + n(z)/bw = K_N(0) + n(0)/bw.
  GaussianStream rng(404, 0);
  ParametricCoupling coupling{0.6, 0.3, 0.0, {1.0, 0.0}};
  const double z = 1.5;
  const int steps = 40;
  const int trajectories = 24;
  const int window = 128;

  IntensityEnsemble in, out;
  in.dt = out.dt = 1.0;
  for (int t = 0; t < trajectories; ++t) {
    std::vector<double> n1_in(window), n2_in(window), n1_out(window), n2_out(window);
    for (int i = 0; i < window; ++i) {
      ConjugatePair pair{rng.complex_normal(1.2), rng.complex_normal(0.7)};
      n1_in[i] = std::norm(pair.alpha1);
      n2_in[i] = std::norm(pair.alpha2);
      for (int s = 0; s < steps; ++s) {
        pair = pair_step(pair, coupling, s * z / steps, z / steps);
      }
      n1_out[i] = std::norm(pair.alpha1);
      n2_out[i] = std::norm(pair.alpha2);
    }
    in.n1.push_back(n1_in);
    in.n2.push_back(n2_in);
    out.n1.push_back(n1_out);
    out.n2.push_back(n2_out);
  }

  DetectionConfig cfg{0.8, 4.0, 2.0, 24};
  const SpectrumResult spec_in = difference_spectrum(in, cfg);
  const SpectrumResult spec_out = difference_spectrum(out, cfg);

  // Gain actually happened.
  CHECK(spec_out.n1_mean + spec_out.n2_mean >
        1.5 * (spec_in.n1_mean + spec_in.n2_mean));

  const double shift_in = (spec_in.n1_mean + spec_in.n2_mean) / cfg.bandwidth;
  const double shift_out = (spec_out.n1_mean + spec_out.n2_mean) / cfg.bandwidth;
  for (std::size_t i = 0; i < spec_in.K_N.size(); ++i) {
    const double lhs = spec_out.K_N[i] + shift_out;
    const double rhs = spec_in.K_N[i] + shift_in;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  }
}

}  // TEST_SUITE
