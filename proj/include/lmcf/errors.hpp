#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lmcf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the admissible parameter domain (bad range, boundary ratio, open arc where a loop is needed).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Degenerate discretization: coincident nodes, node at the origin, unresolved angle lift.
class MeshError : public Error {
 public:
  using Error::Error;
};

/// A node came closer to the origin than the configured floor.
class SingularRadiusError : public Error {
 public:
  using Error::Error;
};

/// A least-squares fit did not reach an acceptable residual.
class NoFitError : public Error {
 public:
  using Error::Error;
};

/// Structured input (config, basis file) failed validation; carries every failure found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> failures)
      : Error(join(failures)), failures_(std::move(failures)) {}

  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "validation failed:";
    for (const auto& item : items) out += "\n  - " + item;
    return out;
  }
  std::vector<std::string> failures_;
};

}  // namespace lmcf
