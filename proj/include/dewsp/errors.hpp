#pragma once

#include <stdexcept>
#include <string>

namespace dewsp {

// Process exit code category: validation -> 1, data -> 2, numeric -> 3.
enum class ErrorClass { Validation = 1, Data = 2, Numeric = 3 };

enum class ErrorCode {
  // market data
  MissingColumn,
  UnparseableRow,
  NonMonotoneDates,
  NonPositivePrice,
  EmptyInput,
  WindowTooShort,
  // indicators
  InsufficientHistory,
  LengthMismatch,
  InsufficientWarmup,
  // neural
  ShapeMismatch,
  EmptyDataset,
  NonFiniteLoss,
  // portfolio
  NonFiniteForecast,
  InvalidSubsetSize,
  EmptyWindow,
  SolverDiverged,
  // backtest
  MissingForecast,
  // metrics
  DegenerateSeries,
  DivisionByZero,
  // config / IO
  InvalidSpec,
  ConfigError,
  IoError,
};

const char* to_string(ErrorCode code);
ErrorClass classify(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message);

  ErrorCode code() const { return code_; }
  ErrorClass error_class() const { return classify(code_); }
  int exit_code() const { return static_cast<int>(error_class()); }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace dewsp
