#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace l0path {

class LossSequence;

// Throws Error with EmptyInput, LengthMismatch, NonFiniteValue,
// NotStrictlyDecreasing or ComplexityNotIncreasing. The reported index is the
// 0-based position of the later element of the first offending pair.
LossSequence validate_losses(
    std::span<const double> losses,
    std::optional<std::span<const double>> complexities = std::nullopt);

// Strictly decreasing loss values L_1 > ... > L_N, paired with strictly
// increasing model complexities r_1 < ... < r_N. When no complexities are
// given the model sizes 1..N are used.
//
// Instances can only be obtained through validate_losses (or the helpers
// built on it), so every LossSequence in the program satisfies the
// invariants above and holds only finite values.
class LossSequence {
 public:
  std::size_t size() const noexcept { return losses_.size(); }

  std::span<const double> losses() const noexcept { return losses_; }
  std::span<const double> complexities() const noexcept {
    return complexities_;
  }
  bool has_explicit_complexities() const noexcept { return explicit_; }

  // 1-based accessors, matching the model numbering used in paths.
  double loss(std::size_t model) const { return losses_[model - 1]; }
  double complexity(std::size_t model) const {
    return complexities_[model - 1];
  }

 private:
  friend LossSequence validate_losses(std::span<const double>,
                                      std::optional<std::span<const double>>);
  LossSequence(std::vector<double> losses, std::vector<double> complexities,
               bool explicit_complexities)
      : losses_(std::move(losses)),
        complexities_(std::move(complexities)),
        explicit_(explicit_complexities) {}

  std::vector<double> losses_;
  std::vector<double> complexities_;
  bool explicit_ = false;
};

struct PrunedLosses {
  LossSequence losses;
  // 1-based positions in the raw input of each kept entry.
  std::vector<std::size_t> index_map;
};

// Keeps the strict prefix minima of `losses`. A model whose loss is not
// strictly below every earlier kept loss can never be selected, so dropping
// it does not change the selection function. Kept entries carry their
// original complexity: the raw index when `complexities` is absent.
PrunedLosses prune_dominated(
    std::span<const double> losses,
    std::optional<std::span<const double>> complexities = std::nullopt);

}  // namespace l0path
