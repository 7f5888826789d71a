#include "quasilight/langevin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace quasilight {

namespace {

using Complex = std::complex<double>;

// (1 - exp(-x))/x, continuous through x = 0.
double expm1_ratio(double x) {
  if (std::abs(x) < 1e-12) return 1.0 - 0.5 * x;
  return -std::expm1(-x) / x;
}

struct Partial {
  Complex sum_alpha{0.0, 0.0};
  double sum_re2 = 0.0;
  double sum_im2 = 0.0;
  double sum_n = 0.0;
  double sum_n2 = 0.0;
};

}  // namespace

double ou_noise_variance(const DriftDiffusion& dd, double dt) {
  return 2.0 * dd.diffusion * dt * expm1_ratio(2.0 * dd.drift.real() * dt);
}

Complex ou_step(Complex alpha, const DriftDiffusion& dd, double dt,
                GaussianStream& rng) {
  if (!(dt > 0.0)) {
    throw std::domain_error("ou_step: dt must be positive");
  }
  const Complex decayed = alpha * std::exp(-dd.drift * dt);
  if (dd.diffusion == 0.0) return decayed;
  return decayed + rng.complex_normal(ou_noise_variance(dd, dt));
}

TrajectoryEnsemble propagate_1d(const BoundaryInput& input, const DriftDiffusion& dd,
                                const ModeGrid& grid, double z,
                                const EnsembleConfig& config) {
  if (z < 0.0) {
    throw std::domain_error("propagate_1d: z must be non-negative");
  }
  if (config.trajectories < 1 || config.time_bins < 1) {
    throw std::domain_error("propagate_1d: trajectories and time_bins must be >= 1");
  }
  if (!input.series.empty() &&
      static_cast<int>(input.series.size()) != config.time_bins) {
    throw std::domain_error("propagate_1d: boundary series length != time_bins");
  }
  for (const LocalField& f : input.series) {
    if (!(f.grid == grid)) throw std::domain_error("propagate_1d: grid mismatch");
  }

  const int cells = grid.cells();
  const double dz = config.step > 0.0 ? config.step : grid.cell();

  std::vector<double> marks = config.checkpoints;
  std::sort(marks.begin(), marks.end());
  if (marks.empty() || marks.back() != z) marks.push_back(z);
  for (double zc : marks) {
    if (zc < 0.0 || zc > z) {
      throw std::domain_error("propagate_1d: checkpoint outside [0, z]");
    }
  }
  const int n_marks = static_cast<int>(marks.size());

  const int m = config.trajectories;
  std::vector<std::vector<Partial>> partials(
      m, std::vector<Partial>(n_marks));

  TrajectoryEnsemble out{config, grid, {}, {}};
  if (config.keep_fields) {
    out.final_fields.assign(
        m, LocalField{grid, Eigen::VectorXcd::Zero(cells), Representation::full, 0.0});
  }

  auto boundary_value = [&](int bin, int cell) -> Complex {
    if (!input.series.empty()) return input.series[bin].amps[cell];
    return input.uniform;
  };

  auto run_trajectory = [&](int traj) {
    GaussianStream rng(config.seed, static_cast<std::uint64_t>(traj));
    std::vector<Partial>& acc = partials[traj];
    for (int bin = 0; bin < config.time_bins; ++bin) {
      for (int cell = 0; cell < cells; ++cell) {
        Complex alpha = boundary_value(bin, cell);
        double z_now = 0.0;
        for (int mark = 0; mark < n_marks; ++mark) {
          // March to the checkpoint in steps of dz plus one remainder step.
          double remaining = marks[mark] - z_now;
          while (remaining > 1e-15 * (z + 1.0)) {
            const double h = std::min(dz, remaining);
            alpha = ou_step(alpha, dd, h / grid.speed(), rng);
            remaining -= h;
          }
          z_now = marks[mark];
          Partial& p = acc[mark];
          const double n_sample = std::norm(alpha);
          p.sum_alpha += alpha;
          p.sum_re2 += alpha.real() * alpha.real();
          p.sum_im2 += alpha.imag() * alpha.imag();
          p.sum_n += n_sample;
          p.sum_n2 += n_sample * n_sample;
        }
        if (config.keep_fields) out.final_fields[traj].amps[cell] = alpha;
      }
    }
  };

  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    for (int traj = 0; traj < m; ++traj) run_trajectory(traj);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int traj = t; traj < m; traj += threads) run_trajectory(traj);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Trajectory-ordered reduction keeps results bit-identical for any thread
  // count.
  const double count =
      static_cast<double>(m) * config.time_bins * cells;
  out.checkpoints.resize(n_marks);
  for (int mark = 0; mark < n_marks; ++mark) {
    Partial total;
    for (int traj = 0; traj < m; ++traj) {
      const Partial& p = partials[traj][mark];
      total.sum_alpha += p.sum_alpha;
      total.sum_re2 += p.sum_re2;
      total.sum_im2 += p.sum_im2;
      total.sum_n += p.sum_n;
      total.sum_n2 += p.sum_n2;
    }
    MomentStats& s = out.checkpoints[mark];
    s.z = marks[mark];
    s.samples = static_cast<std::int64_t>(count);
    s.mean_alpha = total.sum_alpha / count;
    s.mean_intensity = total.sum_n / count;
    const double var_re =
        std::max(0.0, total.sum_re2 / count - s.mean_alpha.real() * s.mean_alpha.real());
    const double var_im =
        std::max(0.0, total.sum_im2 / count - s.mean_alpha.imag() * s.mean_alpha.imag());
    const double var_n =
        std::max(0.0, total.sum_n2 / count - s.mean_intensity * s.mean_intensity);
    s.sem_alpha_re = std::sqrt(var_re / count);
    s.sem_alpha_im = std::sqrt(var_im / count);
    s.sem_intensity = std::sqrt(var_n / count);
    s.intensity_stddev = std::sqrt(var_n);
  }
  return out;
}

}  // namespace quasilight
