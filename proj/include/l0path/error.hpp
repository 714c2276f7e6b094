#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace l0path {

enum class ErrorCode {
  EmptyInput,
  NotStrictlyDecreasing,
  ComplexityNotIncreasing,
  NonFiniteValue,
  LengthMismatch,
  DegenerateCrossing,
  NegativePenalty,
  EmptyGrid,
  UnsortedGrid,
  DegenerateRange,
  MaxModelsOutOfRange,
  EmptyIntervalSet,
  InvalidError,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every validation failure in the library is reported through this type.
// `index` is the 0-based position of the first offending element, when one
// exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace l0path
