#pragma once

#include <stdexcept>
#include <string>

namespace qkac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad Cartan datum, bad weight, bad option.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A mathematical check failed: an identity the kernel verifies was
/// contradicted by the computation.
class CheckFailure : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public CheckFailure {
 public:
  explicit NotAUnit(std::string residual)
      : CheckFailure("not a unit of the localized ring; residual factor " + residual),
        residual_(std::move(residual)) {}
  const std::string& residual() const noexcept { return residual_; }

 private:
  std::string residual_;
};

class PoleAtZ : public Error {
 public:
  using Error::Error;
};

class HeightExceeded : public Error {
 public:
  using Error::Error;
};

class NonDominant : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

class NegativeMultiplicity : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};

class NegativeCoefficient : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};

class SingularPairing : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};

}  // namespace qkac
