#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace copgeo {

enum class ErrorCode {
  DuplicateOrOutOfRange,
  InvalidIntervalExchange,
  InvalidGrid,
  ResolutionZero,
  ResolutionTooLow,
  ResolutionTooHigh,
  OutOfRange,
  BadShape,
  NegativeEntry,
  ZeroLine,
  NotNormalized,
  IncompatibleResolution,
  CapExceeded,
  NoConvergence,
  ParseError,
  TooFewRows,
  TiesPresent,
  UnsupportedFormat,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace copgeo
