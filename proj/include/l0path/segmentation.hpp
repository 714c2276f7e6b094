#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "l0path/loss_sequence.hpp"

namespace l0path {

// Finite, non-empty sequence of observations.
class DataSequence {
 public:
  // Throws EmptyInput or NonFiniteValue.
  explicit DataSequence(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

// Square-loss segmentations for model sizes k = 1..K.
//
// A changepoint j (1-based, in [1, p - 1]) separates observations 1..j from
// j + 1..p. Model k has k - 1 changepoints and k segment means.
class SegmentationPath {
 public:
  // Nested path: model k adds `split_order[k - 2]` to the changepoints of
  // model k - 1.
  static SegmentationPath nested(DataSequence data, std::vector<double> losses,
                                 std::vector<std::size_t> split_order);
  // One sorted changepoint list per model size.
  static SegmentationPath explicit_lists(
      DataSequence data, std::vector<double> losses,
      std::vector<std::vector<std::size_t>> changepoints);

  std::size_t size() const noexcept { return losses_.size(); }
  std::span<const double> losses() const noexcept { return losses_; }
  const DataSequence& data() const noexcept { return data_; }

  // Sorted changepoints of model k (1-based).
  std::vector<std::size_t> changepoints(std::size_t k) const;
  // Segment means of model k, the piecewise constant fit.
  std::vector<double> means(std::size_t k) const;

 private:
  SegmentationPath(DataSequence data, std::vector<double> losses)
      : data_(std::move(data)), losses_(std::move(losses)) {}

  DataSequence data_;
  std::vector<double> losses_;
  std::vector<std::size_t> split_order_;
  std::vector<std::vector<std::size_t>> lists_;
};

// Sum of squared deviations from the mean of values[begin, end), two-pass.
double segment_cost(std::span<const double> values, std::size_t begin, std::size_t end);

// Square loss of the piecewise constant fit with the given changepoints.
double segmentation_loss(std::span<const double> values,
                         std::span<const std::size_t> changepoints);

// Greedy splitting: each step splits the (segment, position) pair with the
// largest decrease in square loss. Ties go to the leftmost segment, then the
// leftmost position. O(p log p) on average, O(p^2) worst case.
// Throws MaxModelsOutOfRange unless 1 <= max_models <= p.
SegmentationPath binary_segmentation(const DataSequence& data, std::size_t max_models);

// Optimal k-segment square loss for every k <= max_models by segment
// neighbourhood dynamic programming, O(max_models * p^2) time.
// Throws MaxModelsOutOfRange unless 1 <= max_models <= p.
SegmentationPath exact_segmentation(const DataSequence& data, std::size_t max_models);

// z_j = sin(j) + j / n for j = 1..n. Requires n >= 1.
DataSequence synth_data(std::size_t n);

enum class LossShape { Linear, Sqrt };

// Linear: L_t = n - t. Sqrt: L_t = n - sqrt(t). Requires n >= 1.
LossSequence synth_losses(std::size_t n, LossShape shape);

}  // namespace l0path
