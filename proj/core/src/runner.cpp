#include "quasilight/runner.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>

#include "quasilight/csv_io.hpp"
#include "quasilight/errors.hpp"
#include "quasilight/free_transfer.hpp"
#include "quasilight/langevin.hpp"
#include "quasilight/medium.hpp"
#include "quasilight/mode_grid.hpp"
#include "quasilight/paraxial.hpp"
#include "quasilight/parametric.hpp"
#include "quasilight/scenario.hpp"
#include "quasilight/spectra.hpp"
#include "quasilight/transforms.hpp"

namespace quasilight {

namespace {

using Complex = std::complex<double>;
using ordered_json = nlohmann::ordered_json;

void ensure_finite(double value, const std::string& context) {
  if (!std::isfinite(value)) {
    throw PhysicsError("non-finite value in " + context);
  }
}

void check_row(std::span<const double> row, const std::string& context) {
  for (double v : row) ensure_finite(v, context);
}

ModeGrid make_grid(const Scenario& s) {
  return ModeGrid(s.grid.L, s.grid.a, s.grid.m, s.grid.c);
}

DriftDiffusion make_drift_diffusion(const Scenario& s, const ModeGrid& grid) {
  const MediumBlock& m = *s.medium;
  if (m.a_re || m.a_im || m.q_diff) {
    DriftDiffusion dd;
    dd.drift = {m.a_re.value_or(0.0), m.a_im.value_or(0.0)};
    dd.diffusion = m.q_diff.value_or(0.0);
    return dd;
  }
  MediumParams params;
  params.d2 = m.d2;
  params.omega0 = m.omega0;
  params.gamma = m.gamma;
  params.n1 = m.n1;
  params.n2 = m.n2;
  params.volume =
      m.volume == "cell" ? MediumParams::Volume::cell : MediumParams::Volume::box;
  return drift_diffusion(params, grid);
}

// Gaussian envelope packet on the carrier, periodic distance in cells.
LocalField make_packet(const ModeGrid& grid, double center, double width,
                       double amplitude) {
  const int n = grid.cells();
  LocalField f{grid, Eigen::VectorXcd(n), Representation::full, 0.0};
  for (int i = 0; i < n; ++i) {
    double d = std::abs(i - center);
    d = std::min(d, n - d);
    const double mag = amplitude * std::exp(-d * d / (2.0 * width * width));
    const double arg = grid.band_center() * grid.cell_position(i);
    f.amps[i] = mag * Complex(std::cos(arg), std::sin(arg));
  }
  return f;
}

double circular_centroid_cells(const LocalField& f) {
  const int n = f.grid.cells();
  double total = 0.0;
  Complex phasor{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const double w = std::norm(f.amps[i]);
    total += w;
    const double angle = 2.0 * std::numbers::pi * i / n;
    phasor += w * Complex(std::cos(angle), std::sin(angle));
  }
  if (total == 0.0) return 0.0;
  double cell = std::arg(phasor) * n / (2.0 * std::numbers::pi);
  if (cell < 0.0) cell += n;
  return cell;
}

TransverseField make_gaussian_beam(const TransverseGrid& grid, double w0,
                                   double amplitude) {
  TransverseField f{grid, Eigen::VectorXcd(grid.samples()), 0.0};
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double r2 = grid.x(ix) * grid.x(ix) + grid.y(iy) * grid.y(iy);
      f.amps[static_cast<Eigen::Index>(iy) * grid.nx + ix] =
          amplitude * std::exp(-r2 / (w0 * w0));
    }
  }
  return f;
}

ordered_json raw_to_json(const RawTable& raw) {
  ordered_json j;
  for (const auto& [section, table] : raw) {
    ordered_json s;
    for (const auto& [key, value] : table) {
      if (const double* d = std::get_if<double>(&value.value)) {
        s[key] = *d;
      } else if (const std::string* str = std::get_if<std::string>(&value.value)) {
        s[key] = *str;
      } else if (const bool* b = std::get_if<bool>(&value.value)) {
        s[key] = *b;
      }
    }
    j[section.empty() ? "_top" : section] = s;
  }
  return j;
}

}  // namespace

RunResult run_scenario(const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  Scenario scenario = load_scenario(options.scenario_path, options.overrides);
  if (options.seed_override && scenario.ensemble) {
    scenario.ensemble->seed = *options.seed_override;
  }
  std::filesystem::create_directories(options.out_dir);

  RunResult result;
  auto artifact = [&](const std::string& name) {
    result.artifacts.push_back(options.out_dir / name);
    return options.out_dir / name;
  };

  const std::uint64_t seed =
      options.seed_override.value_or(scenario.ensemble ? scenario.ensemble->seed : 1);

  switch (scenario.kind) {
    case Scenario::Kind::basis: {
      const ModeGrid grid = make_grid(scenario);
      const int n = grid.cells();

      GaussianStream rng(seed, 0);
      CollectiveField f{grid, Eigen::VectorXcd(n)};
      for (int i = 0; i < n; ++i) f.amps[i] = rng.complex_normal(1.0);
      const CollectiveField back = to_collective(to_local(f));
      const double roundtrip = (back.amps - f.amps).cwiseAbs().maxCoeff();

      // Gram matrix of the packets on a uniform fine x grid; the rectangle
      // rule is exact for the band trig polynomials once P >= N.
      const int samples = 4 * n;
      const double dx = grid.length() / samples;
      double off_max = 0.0;
      double diag_dev = 0.0;
      for (int l = 0; l < n; ++l) {
        for (int lp = l; lp < n; ++lp) {
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
      const double delta0_dev = std::abs(grid.scaled_delta(0.0) - grid.bandwidth());

      const auto path = artifact("report.csv");
      std::ofstream out(path, std::ios::binary);
      out << "metric,value\n";
      auto metric = [&](const std::string& name, double value) {
        ensure_finite(value, "basis report");
        out << name << ',' << format_float(value) << '\n';
      };
      metric("roundtrip_max_error", roundtrip);
      metric("gram_offdiag_max", off_max);
      metric("gram_diag_max_dev", diag_dev);
      metric("delta0_minus_bandwidth", delta0_dev);
      break;
    }

    case Scenario::Kind::free: {
      const ModeGrid grid = make_grid(scenario);
      const BeamBlock& beam = *scenario.beam;
      const double dt =
          beam.dt > 0.0 ? beam.dt : grid.cell() / (4.0 * grid.speed());
      LocalField f = make_packet(grid, beam.center, beam.width, beam.amplitude);

      CsvWriter csv(artifact("packet.csv"), {"t", "centroid_cell", "power"});
      double t = 0.0;
      for (int step = 0; step <= beam.steps; ++step) {
        const double row[3] = {t, circular_centroid_cells(f), f.power()};
        check_row(row, "free packet output");
        csv.write_row(row);
        if (step < beam.steps) {
          f = evolve_free(f, dt);
          t += dt;
        }
      }
      break;
    }

    case Scenario::Kind::linear1d: {
      const ModeGrid grid = make_grid(scenario);
      const DriftDiffusion dd = make_drift_diffusion(scenario, grid);
      EnsembleBlock ens = *scenario.ensemble;
      ens.seed = seed;

      EnsembleConfig config;
      config.trajectories = ens.trajectories;
      config.seed = ens.seed;
      config.time_bins = ens.time_bins;
      config.step = ens.dz;
      config.threads = options.threads;
      for (int i = 0; i <= ens.checkpoints; ++i) {
        config.checkpoints.push_back(ens.z_max * i / ens.checkpoints);
      }
      const BoundaryInput input = BoundaryInput::constant(ens.alpha0);
      const TrajectoryEnsemble ensemble =
          propagate_1d(input, dd, grid, ens.z_max, config);

      CsvWriter csv(artifact("moments.csv"),
                    {"z", "mean_re", "mean_im", "mean_intensity", "sigma_intensity"});
      for (const MomentStats& s : ensemble.checkpoints) {
        const double row[5] = {s.z, s.mean_alpha.real(), s.mean_alpha.imag(),
                               s.mean_intensity, s.intensity_stddev};
        check_row(row, "linear1d moments");
        csv.write_row(row);
      }
      break;
    }

    case Scenario::Kind::paraxial: {
      const ModeGrid grid = make_grid(scenario);
      const DriftDiffusion dd = make_drift_diffusion(scenario, grid);
      const TransverseBlock& tb = *scenario.transverse;
      const TransverseGrid tgrid(tb.nx, tb.ny, tb.dx, tb.dy, tb.radius);

      TransverseField field =
          scenario.beam
              ? make_gaussian_beam(tgrid, scenario.beam->w0, scenario.beam->amplitude)
              : TransverseField{tgrid, Eigen::VectorXcd::Zero(tgrid.samples()), 0.0};
      if (scenario.beam) {
        const double edge = nyquist_edge_fraction(field);
        if (edge > 1e-6) {
          throw PreconditionError(
              "paraxial: input beam under-resolved, Nyquist edge power fraction " +
              format_float(edge));
        }
      }

      ParaxialNoiseConfig noise{grid.cell(), grid.speed(), dd.diffusion > 0.0};
      ParaxialPropagator prop(tgrid, grid.band_center(), tb.dz, dd, noise);
      GaussianStream rng(seed, 0);

      CsvWriter power_csv(artifact("power.csv"), {"step", "z", "power"});
      {
        const double row[3] = {0.0, field.z, field.power()};
        power_csv.write_row(row);
      }
      for (int step = 1; step <= tb.steps; ++step) {
        prop.step(field, &rng);
        const double row[3] = {static_cast<double>(step), field.z, field.power()};
        check_row(row, "paraxial power");
        power_csv.write_row(row);
      }

      CsvWriter field_csv(artifact("field.csv"), {"x", "y", "re", "im"});
      for (int iy = 0; iy < tgrid.ny; ++iy) {
        for (int ix = 0; ix < tgrid.nx; ++ix) {
          const Complex v = field.amps[static_cast<Eigen::Index>(iy) * tgrid.nx + ix];
          const double row[4] = {tgrid.x(ix), tgrid.y(iy), v.real(), v.imag()};
          check_row(row, "paraxial field");
          field_csv.write_row(row);
        }
      }
      write_field_qlf1(artifact("field.qlf1"), field);
      break;
    }

    case Scenario::Kind::parametric: {
      const ParametricBlock& pb = *scenario.parametric;
      ParametricCoupling coupling{pb.g, pb.phi, pb.delta, pb.pump};
      ConjugatePair pair{pb.alpha1, pb.alpha2};
      const double dz = pb.z_max / pb.steps;
      const double i0 = motion_integral(pair);

      CsvWriter csv(artifact("pair.csv"), {"z", "n1", "n2", "I", "I_drift"});
      double z = 0.0;
      for (int step = 0; step <= pb.steps; ++step) {
        const double i_now = motion_integral(pair);
        const double row[5] = {z, std::norm(pair.alpha1), std::norm(pair.alpha2), i_now,
                               i_now - i0};
        check_row(row, "parametric pair");
        csv.write_row(row);
        if (step < pb.steps) {
          pair = pair_step(pair, coupling, z, dz);
          z += dz;
        }
      }
      break;
    }

    case Scenario::Kind::spectrum: {
      const ModeGrid grid = make_grid(scenario);
      const DriftDiffusion dd = make_drift_diffusion(scenario, grid);
      EnsembleBlock ens = *scenario.ensemble;
      ens.seed = seed;
      const DetectionBlock& det = *scenario.detection;

      const double dt = ens.dt > 0.0 ? ens.dt : grid.cell() / grid.speed();
      IntensityEnsemble intensity;
      intensity.dt = dt;
      intensity.n1.resize(ens.trajectories);
      intensity.n2.resize(ens.trajectories);
      const int burn_steps = static_cast<int>(std::ceil(ens.burn_in / dt));
      for (int traj = 0; traj < ens.trajectories; ++traj) {
        GaussianStream rng(ens.seed, static_cast<std::uint64_t>(traj));
        Complex alpha = ens.alpha0;
        for (int i = 0; i < burn_steps; ++i) alpha = ou_step(alpha, dd, dt, rng);
        intensity.n1[traj].reserve(ens.samples);
        intensity.n2[traj].assign(ens.samples, 0.0);
        for (int i = 0; i < ens.samples; ++i) {
          alpha = ou_step(alpha, dd, dt, rng);
          intensity.n1[traj].push_back(std::norm(alpha));
        }
      }

      DetectionConfig cfg{det.q, grid.bandwidth(), det.omega_max, det.omega_points};
      const SpectrumResult estimate = difference_spectrum(intensity, cfg);

      CsvWriter csv(artifact("spectrum.csv"), {"Omega", "K", "K_N", "i2"});
      for (std::size_t i = 0; i < estimate.omega.size(); ++i) {
        const double row[4] = {estimate.omega[i], estimate.K[i], estimate.K_N[i],
                               estimate.i2[i]};
        check_row(row, "spectrum output");
        csv.write_row(row);
      }
      break;
    }
  }

  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  ordered_json manifest;
  manifest["tool"] = "quasilight";
  manifest["version"] = "0.1.0";
  manifest["kind"] = to_string(scenario.kind);
  manifest["scenario_file"] = options.scenario_path.string();
  manifest["seed"] = seed;
  manifest["threads"] = options.threads;
  manifest["overrides"] = options.overrides;
  manifest["wall_time_ms"] = elapsed;
  ordered_json names = ordered_json::array();
  for (const auto& a : result.artifacts) names.push_back(a.filename().string());
  manifest["artifacts"] = names;
  manifest["scenario"] = raw_to_json(scenario.raw);

  const auto manifest_path = options.out_dir / "manifest.json";
  std::ofstream out(manifest_path, std::ios::binary);
  out << manifest.dump(2) << '\n';
  result.artifacts.push_back(manifest_path);
  return result;
}

}  // namespace quasilight
