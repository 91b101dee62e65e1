#pragma once

#include <stdexcept>
#include <string>

namespace discord {

/// Input that violates a documented precondition (bad dimension, bad
/// parameter domain, malformed file). The CLI maps these to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A matrix that is not a density matrix. `invariant()` names the violated
/// property: "dimensions", "hermitian", "trace" or "positivity".
class ValidationError : public InvalidInput {
 public:
  ValidationError(std::string invariant, const std::string& what)
      : InvalidInput(what), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

class DomainError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Eigensolver or decomposition failure. Exit code 3 at the CLI.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace discord
