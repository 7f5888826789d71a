#include "quasilight/spectra.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "quasilight/fft.hpp"

namespace quasilight {

namespace {
constexpr double kPi = std::numbers::pi;

void validate(const DetectionConfig& cfg) {
  if (!(cfg.q >= 0.0 && cfg.q <= 1.0)) {
    throw std::domain_error("DetectionConfig: q must lie in [0, 1]");
  }
  if (!(cfg.bandwidth > 0.0)) {
    throw std::domain_error("DetectionConfig: bandwidth must be positive");
  }
}
}  // namespace

SpectrumResult difference_spectrum(const IntensityEnsemble& ensemble,
                                   const DetectionConfig& cfg) {
  validate(cfg);
  if (ensemble.n1.empty() || ensemble.n1.size() != ensemble.n2.size()) {
    throw std::domain_error("difference_spectrum: empty or mismatched ensemble");
  }
  if (!(ensemble.dt > 0.0)) {
    throw std::domain_error("difference_spectrum: dt must be positive");
  }
  const std::size_t m = ensemble.n1.size();
  const std::size_t w = ensemble.n1.front().size();
  if (w < 4) {
    throw std::domain_error("difference_spectrum: records too short");
  }
  for (std::size_t t = 0; t < m; ++t) {
    if (ensemble.n1[t].size() != w || ensemble.n2[t].size() != w) {
      throw std::domain_error("difference_spectrum: ragged records");
    }
  }

  SpectrumResult result;

  // Pooled means and the stationarity drift test on the record halves.
  double sum1 = 0.0, sum2 = 0.0;
  double head = 0.0, tail = 0.0, head2 = 0.0, tail2 = 0.0;
  const std::size_t half = w / 2;
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t i = 0; i < w; ++i) {
      sum1 += ensemble.n1[t][i];
      sum2 += ensemble.n2[t][i];
      const double current = ensemble.n1[t][i] - ensemble.n2[t][i];
      if (i < half) {
        head += current;
        head2 += current * current;
      } else {
        tail += current;
        tail2 += current * current;
      }
    }
  }
  const double count = static_cast<double>(m) * w;
  result.n1_mean = sum1 / count;
  result.n2_mean = sum2 / count;

  const double n_head = static_cast<double>(m) * half;
  const double n_tail = count - n_head;
  const double mean_head = head / n_head;
  const double mean_tail = tail / n_tail;
  const double var_head = std::max(0.0, head2 / n_head - mean_head * mean_head);
  const double var_tail = std::max(0.0, tail2 / n_tail - mean_tail * mean_tail);
  const double se = std::sqrt(var_head / n_head + var_tail / n_tail);
  result.drift_sigma = se > 0.0 ? std::abs(mean_head - mean_tail) / se : 0.0;
  result.stationary = result.drift_sigma <= 5.0;

  const double mean_current = result.n1_mean - result.n2_mean;

  // Hann window (periodic form) and its power normalization.
  std::vector<double> window(w);
  double window_power = 0.0;
  for (std::size_t i = 0; i < w; ++i) {
    window[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * i / w));
    window_power += window[i] * window[i];
  }

  // Analysis bins snap to the DFT grid of the record.
  const double omega_step = 2.0 * kPi / (static_cast<double>(w) * ensemble.dt);
  int max_bin = static_cast<int>(std::floor(cfg.omega_max / omega_step));
  max_bin = std::min<int>(max_bin, static_cast<int>(w / 2));
  max_bin = std::max(max_bin, 1);
  int stride = std::max(1, (max_bin + cfg.omega_points - 1) / cfg.omega_points);

  std::vector<int> bins;
  for (int b = 0; b <= max_bin; b += stride) bins.push_back(b);

  const double norm = ensemble.dt / window_power;
  std::vector<double> mean_p(bins.size(), 0.0);
  std::vector<double> mean_p2(bins.size(), 0.0);

  Fft1d fft(static_cast<int>(w));
  std::vector<std::complex<double>> buf(w);
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t i = 0; i < w; ++i) {
      const double x = ensemble.n1[t][i] - ensemble.n2[t][i] - mean_current;
      buf[i] = window[i] * x;
    }
    fft.forward(buf.data());
    for (std::size_t bi = 0; bi < bins.size(); ++bi) {
      const double p = norm * std::norm(buf[bins[bi]]);
      mean_p[bi] += p;
      mean_p2[bi] += p * p;
    }
  }

  result.omega.resize(bins.size());
  result.K.resize(bins.size());
  result.K_N.resize(bins.size());
  result.sem_K.resize(bins.size());
  const double ordering = (result.n1_mean + result.n2_mean) / cfg.bandwidth;
  for (std::size_t bi = 0; bi < bins.size(); ++bi) {
    result.omega[bi] = bins[bi] * omega_step;
    const double k = mean_p[bi] / static_cast<double>(m);
    result.K[bi] = k;
    result.K_N[bi] = k - ordering;
    const double var = std::max(0.0, mean_p2[bi] / static_cast<double>(m) - k * k);
    result.sem_K[bi] = std::sqrt(var / static_cast<double>(m));
  }
  result.i2 = photocurrent_spectrum(result.K_N, result.n1_mean, result.n2_mean, cfg);
  return result;
}

std::vector<double> photocurrent_spectrum(const std::vector<double>& K_N, double n1,
                                          double n2, const DetectionConfig& cfg) {
  validate(cfg);
  const double total = n1 + n2;
  const double floor = -total / cfg.bandwidth;
  const double slack = 1e-12 * std::max(1.0, std::abs(floor));
  const double eta = cfg.eta();
  std::vector<double> i2(K_N.size());
  for (std::size_t i = 0; i < K_N.size(); ++i) {
    if (K_N[i] < floor - slack) {
      std::ostringstream msg;
      msg << "photocurrent_spectrum: K_N violates physicality bound by "
          << (floor - K_N[i]);
      throw std::domain_error(msg.str());
    }
    i2[i] = eta * total + eta * eta * K_N[i];
  }
  return i2;
}

std::vector<double> output_noise(const std::vector<double>& input_i2, double n10,
                                 double n20, double n1, double n2,
                                 const DetectionConfig& cfg) {
  validate(cfg);
  const double bw = cfg.bandwidth;
  const double q = cfg.q;
  const double shift =
      bw * (n1 + n2) * q * (1.0 - q) + bw * (n10 + n20) * q * (q - 1.0);
  std::vector<double> out(input_i2.size());
  for (std::size_t i = 0; i < input_i2.size(); ++i) {
    out[i] = shift + input_i2[i];
  }
  return out;
}

}  // namespace quasilight
