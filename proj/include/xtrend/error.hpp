#pragma once

#include <stdexcept>
#include <string>

namespace xtrend {

enum class ErrorCode {
  UnterminatedQuote,
  MissingHeader,
  UnparseableDate,
  InvalidInput,
  DateNotFound,
  InsufficientPairs,
  ZeroVariance,
  NoValidLag,
  EmptyDay,
  WorkerFailure,
  Config,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnterminatedQuote: return "UnterminatedQuote";
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::UnparseableDate: return "UnparseableDate";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DateNotFound: return "DateNotFound";
    case ErrorCode::InsufficientPairs: return "InsufficientPairs";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::NoValidLag: return "NoValidLag";
    case ErrorCode::EmptyDay: return "EmptyDay";
    case ErrorCode::WorkerFailure: return "WorkerFailure";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by statistics that are undefined on their input (too few pairs,
/// constant series, no usable lag). Callers report these as "undefined".
class StatError : public Error {
 public:
  using Error::Error;
};

}  // namespace xtrend
