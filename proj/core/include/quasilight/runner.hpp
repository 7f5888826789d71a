#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace quasilight {

struct RunOptions {
  std::filesystem::path scenario_path;
  std::filesystem::path out_dir = ".";
  std::vector<std::string> overrides;
  int threads = 1;
  std::optional<std::uint64_t> seed_override;  // QUASILIGHT_SEED
};

struct RunResult {
  std::vector<std::filesystem::path> artifacts;  // includes the manifest
};

/// Validates, executes the pipeline for the scenario kind, and writes the
/// CSV/binary artifacts plus manifest.json into out_dir. Throws
/// ValidationError for schema problems, PreconditionError/PhysicsError for
/// physics failures (NaN outputs, unresolved grids).
RunResult run_scenario(const RunOptions& options);

}  // namespace quasilight
