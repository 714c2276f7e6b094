#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "l0path/loss_sequence.hpp"
#include "l0path/selection.hpp"

namespace l0path {

struct QuadraticPathResult {
  SelectionPath path;
  // Number of crossover penalties evaluated; N * M_N / 2 up to lower order
  // terms.
  std::size_t crossover_evaluations = 0;
};

// Baseline that builds the path from the largest model downwards. From the
// current model it scans every smaller model and moves to the one whose
// crossover penalty is smallest (ties go to the smaller model). O(N * M_N).
QuadraticPathResult quadratic_path_counted(const LossSequence& input);

inline SelectionPath quadratic_path(const LossSequence& input) {
  return quadratic_path_counted(input).path;
}

struct GridResult {
  std::vector<double> penalties;     // strictly increasing
  std::vector<std::size_t> selected; // 1-based model per penalty
  // Geometric means of adjacent penalties whose selections differ, in path
  // order (decreasing penalty).
  std::vector<double> approx_breakpoints;
};

// Evaluates the selection function independently at every penalty, O(N * G).
// Throws EmptyGrid, UnsortedGrid, NegativePenalty (for penalties <= 0) or
// NonFiniteValue.
GridResult grid_search(const LossSequence& input, std::span<const double> penalties);

// `count` penalties geometrically spaced over [hi / 1e6, hi], where hi is the
// largest breakpoint, max_k c(1, k). Throws EmptyGrid for count == 0 and
// DegenerateRange for single-model input.
std::vector<double> default_grid(const LossSequence& input, std::size_t count);

}  // namespace l0path
