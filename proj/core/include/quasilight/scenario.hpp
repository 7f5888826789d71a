#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace quasilight {

/// Raw scenario file content: [section] tables of key = value pairs, where
/// values are numbers, quoted strings, or booleans (a TOML subset).
struct RawValue {
  std::variant<double, std::string, bool> value;
  int line = 0;
};
using RawTable = std::map<std::string, std::map<std::string, RawValue>>;

RawTable parse_raw_scenario(const std::string& text, std::vector<std::string>& issues);

struct GridBlock {
  double L = 0.0, a = 0.0, m = 0.0, c = 1.0;
};

struct MediumBlock {
  double d2 = 1.0, omega0 = 0.0, gamma = 1.0, n1 = 0.0, n2 = 0.0;
  std::string volume = "box";
  // Optional explicit coefficients; when any is set the two-level values are
  // bypassed.
  std::optional<double> a_re, a_im, q_diff;
};

struct EnsembleBlock {
  int trajectories = 1;
  std::uint64_t seed = 1;
  int time_bins = 1;
  double z_max = 1.0;
  double dz = 0.0;  // 0 = one cell per step
  int checkpoints = 10;
  std::complex<double> alpha0{0.0, 0.0};
  int samples = 1024;     // spectrum record length
  double dt = 0.0;        // spectrum sampling step; 0 = a/c
  double burn_in = 0.0;   // spectrum burn-in span
};

struct DetectionBlock {
  double q = 1.0;
  double omega_max = 1.0;
  int omega_points = 64;
};

struct TransverseBlock {
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;
  std::optional<double> radius;  // nullopt = unbounded
  double dz = 0.0;
  int steps = 1;
};

struct ParametricBlock {
  double g = 0.0, phi = 0.0, delta = 0.0;
  std::complex<double> pump{1.0, 0.0};
  std::complex<double> alpha1{0.0, 0.0};
  std::complex<double> alpha2{0.0, 0.0};
  double z_max = 1.0;
  int steps = 100;
};

struct BeamBlock {
  double w0 = 1.0;        // paraxial gaussian 1/e amplitude radius
  double amplitude = 1.0;
  double center = 0.0;    // free packet center, cells
  double width = 1.0;     // free packet width, cells
  int steps = 100;        // free evolution steps
  double dt = 0.0;        // free time step; 0 = a/(4c)
};

struct Scenario {
  enum class Kind { basis, free, linear1d, paraxial, parametric, spectrum };
  Kind kind = Kind::basis;

  GridBlock grid;
  std::optional<MediumBlock> medium;
  std::optional<EnsembleBlock> ensemble;
  std::optional<DetectionBlock> detection;
  std::optional<TransverseBlock> transverse;
  std::optional<ParametricBlock> parametric;
  std::optional<BeamBlock> beam;

  RawTable raw;  // echoed into the run manifest
};

std::string to_string(Scenario::Kind kind);

/// Schema and range checks only; never runs physics. Returns the full issue
/// list (empty means valid). Overrides are "section.key=value" strings
/// ("kind=value" for the top level) applied before validation.
std::vector<std::string> validate_scenario(const std::string& text,
                                           const std::vector<std::string>& overrides = {});

/// Parses and validates; throws ValidationError with the issue list on any
/// problem. `run` accepts exactly the inputs `validate` accepts.
Scenario load_scenario(const std::filesystem::path& path,
                       const std::vector<std::string>& overrides = {});

}  // namespace quasilight
