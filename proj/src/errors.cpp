#include "dewsp/errors.hpp"

namespace dewsp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::UnparseableRow: return "UnparseableRow";
    case ErrorCode::NonMonotoneDates: return "NonMonotoneDates";
    case ErrorCode::NonPositivePrice: return "NonPositivePrice";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::InsufficientHistory: return "InsufficientHistory";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InsufficientWarmup: return "InsufficientWarmup";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::NonFiniteForecast: return "NonFiniteForecast";
    case ErrorCode::InvalidSubsetSize: return "InvalidSubsetSize";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::SolverDiverged: return "SolverDiverged";
    case ErrorCode::MissingForecast: return "MissingForecast";
    case ErrorCode::DegenerateSeries: return "DegenerateSeries";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

ErrorClass classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingColumn:
    case ErrorCode::UnparseableRow:
    case ErrorCode::NonMonotoneDates:
    case ErrorCode::NonPositivePrice:
    case ErrorCode::EmptyInput:
    case ErrorCode::IoError:
      return ErrorClass::Data;
    case ErrorCode::NonFiniteLoss:
    case ErrorCode::SolverDiverged:
    case ErrorCode::NonFiniteForecast:
    case ErrorCode::DegenerateSeries:
    case ErrorCode::DivisionByZero:
      return ErrorClass::Numeric;
    default:
      return ErrorClass::Validation;
  }
}

Error::Error(ErrorCode code, std::string message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace dewsp
