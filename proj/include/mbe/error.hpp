#pragma once

#include <stdexcept>
#include <string>

namespace mbe {

enum class ErrorCode {
  DimensionMismatch,
  EmptyInput,
  NotAVertex,
  NotPointed,
  DependentGenerators,
  IndexOutOfRange,
  VanishingDenominatorFactor,
  ZeroBinomialExponent,
  ZeroHeightDenominatorFactor,
  NegativeOrthantViolation,
  NonGenericLinearForm,
  InvalidArgument,
  InvariantViolation,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Exception carrying a machine-readable code and the offending datum
/// (rendered as text, usually a JSON fragment such as an index or vector).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string datum = {})
      : std::runtime_error(message), code_(code), datum_(std::move(datum)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& datum() const noexcept { return datum_; }

 private:
  ErrorCode code_;
  std::string datum_;
};

}  // namespace mbe
