#include "l0path/error.hpp"

#include <utility>

namespace l0path {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotStrictlyDecreasing: return "NotStrictlyDecreasing";
    case ErrorCode::ComplexityNotIncreasing: return "ComplexityNotIncreasing";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateCrossing: return "DegenerateCrossing";
    case ErrorCode::NegativePenalty: return "NegativePenalty";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::UnsortedGrid: return "UnsortedGrid";
    case ErrorCode::DegenerateRange: return "DegenerateRange";
    case ErrorCode::MaxModelsOutOfRange: return "MaxModelsOutOfRange";
    case ErrorCode::EmptyIntervalSet: return "EmptyIntervalSet";
    case ErrorCode::InvalidError: return "InvalidError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      index_(index) {}

}  // namespace l0path
