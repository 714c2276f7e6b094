#include "l0path/loss_sequence.hpp"

#include <cmath>
#include <string>

#include "l0path/error.hpp"

namespace l0path {
namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::NonFiniteValue,
                  std::string(what) + " value at index " + std::to_string(i) +
                      " is not finite",
                  i);
    }
  }
}

}  // namespace

LossSequence validate_losses(std::span<const double> losses,
                             std::optional<std::span<const double>> complexities) {
  if (losses.empty()) {
    throw Error(ErrorCode::EmptyInput, "no loss values");
  }
  if (complexities && complexities->size() != losses.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "got " + std::to_string(losses.size()) + " losses but " +
                    std::to_string(complexities->size()) + " complexities");
  }
  require_finite(losses, "loss");
  if (complexities) require_finite(*complexities, "complexity");

  for (std::size_t i = 1; i < losses.size(); ++i) {
    if (!(losses[i - 1] > losses[i])) {
      throw Error(ErrorCode::NotStrictlyDecreasing,
                  "loss at index " + std::to_string(i) +
                      " is not strictly below the previous loss",
                  i);
    }
  }

  std::vector<double> r;
  if (complexities) {
    for (std::size_t i = 1; i < complexities->size(); ++i) {
      if (!((*complexities)[i - 1] < (*complexities)[i])) {
        throw Error(ErrorCode::ComplexityNotIncreasing,
                    "complexity at index " + std::to_string(i) +
                        " is not strictly above the previous complexity",
                    i);
      }
    }
    r.assign(complexities->begin(), complexities->end());
  } else {
    r.resize(losses.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<double>(i + 1);
  }
  return LossSequence(std::vector<double>(losses.begin(), losses.end()),
                      std::move(r), complexities.has_value());
}

PrunedLosses prune_dominated(std::span<const double> losses,
                             std::optional<std::span<const double>> complexities) {
  if (losses.empty()) {
    throw Error(ErrorCode::EmptyInput, "no loss values");
  }
  if (complexities && complexities->size() != losses.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "got " + std::to_string(losses.size()) + " losses but " +
                    std::to_string(complexities->size()) + " complexities");
  }
  require_finite(losses, "loss");

  std::vector<double> kept_losses;
  std::vector<double> kept_complexities;
  std::vector<std::size_t> index_map;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    if (kept_losses.empty() || losses[i] < kept_losses.back()) {
      kept_losses.push_back(losses[i]);
      kept_complexities.push_back(complexities ? (*complexities)[i]
                                               : static_cast<double>(i + 1));
      index_map.push_back(i + 1);
    }
  }
  return {validate_losses(kept_losses, std::span<const double>(kept_complexities)),
          std::move(index_map)};
}

}  // namespace l0path
