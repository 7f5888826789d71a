#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quasilight/errors.hpp"
#include "quasilight/runner.hpp"
#include "quasilight/scenario.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitPhysics = 3;

std::optional<std::uint64_t> seed_from_env() {
  const char* env = std::getenv("QUASILIGHT_SEED");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    std::cerr << "warning: ignoring non-numeric QUASILIGHT_SEED '" << env << "'\n";
    return std::nullopt;
  }
  return static_cast<std::uint64_t>(value);
}

int do_validate(const std::string& file, const std::vector<std::string>& overrides) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot read scenario file " << file << "\n";
    return kExitValidation;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto issues = quasilight::validate_scenario(buffer.str(), overrides);
  if (issues.empty()) {
    std::cout << "ok: " << file << "\n";
    return 0;
  }
  std::cerr << "invalid: " << file << "\n";
  for (const auto& issue : issues) std::cerr << "  - " << issue << "\n";
  return kExitValidation;
}

int do_run(const quasilight::RunOptions& options) {
  try {
    const auto result = quasilight::run_scenario(options);
    for (const auto& artifact : result.artifacts) {
      std::cout << "wrote " << artifact.string() << "\n";
    }
    return 0;
  } catch (const quasilight::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const quasilight::PreconditionError& e) {
    std::cerr << "physics precondition failure: " << e.what() << "\n";
    return kExitPhysics;
  } catch (const quasilight::PhysicsError& e) {
    std::cerr << "physics failure: " << e.what() << "\n";
    return kExitPhysics;
  } catch (const std::domain_error& e) {
    std::cerr << "physics precondition failure: " << e.what() << "\n";
    return kExitPhysics;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasilight - localized-mode light propagation simulations"};
  app.require_subcommand(1);

  std::string scenario_file;
  std::string out_dir = ".";
  int threads = 1;
  std::vector<std::string> overrides;

  auto* run = app.add_subcommand("run", "Execute a scenario file");
  run->add_option("file", scenario_file, "Scenario file")->required();
  run->add_option("--override", overrides, "Override scenario keys (section.key=value)");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--threads", threads, "Worker threads for ensemble integration")
      ->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Schema-check a scenario file");
  validate->add_option("file", scenario_file, "Scenario file")->required();
  validate->add_option("--override", overrides,
                       "Override scenario keys (section.key=value)");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(validate)) {
    return do_validate(scenario_file, overrides);
  }

  quasilight::RunOptions options;
  options.scenario_path = scenario_file;
  options.out_dir = out_dir;
  options.threads = threads;
  options.overrides = overrides;
  options.seed_override = seed_from_env();
  return do_run(options);
}
