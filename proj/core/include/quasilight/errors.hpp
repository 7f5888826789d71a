#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quasilight {

// Scenario/schema problems: the input file is malformed or out of range.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string all = "scenario validation failed:";
    for (const auto& s : issues) {
      all += "\n  - ";
      all += s;
    }
    return all;
  }

  std::vector<std::string> issues_;
};

// A physics precondition does not hold for otherwise well-formed input
// (e.g. an under-resolved transverse grid).
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The computation produced invalid physics output (NaN/Inf in results).
class PhysicsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace quasilight
