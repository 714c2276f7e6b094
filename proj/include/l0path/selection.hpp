#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "l0path/error.hpp"
#include "l0path/loss_sequence.hpp"

namespace l0path {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Piecewise constant representation of the model selection function.
//
// models[j] (1-based model index into the loss sequence) is selected for every
// penalty strictly inside (breakpoints[j + 1], breakpoints[j]).
// breakpoints.front() is +inf, breakpoints.back() is 0, and
// breakpoints.size() == models.size() + 1.
struct SelectionPath {
  std::vector<std::size_t> models;
  std::vector<double> breakpoints;

  std::size_t size() const noexcept { return models.size(); }
  bool operator==(const SelectionPath&) const = default;
};

// While-loop evaluation counts of the dynamic program. per_step[t - 2] is
// w_t for t = 2..N.
struct IterationStats {
  std::vector<std::size_t> per_step;
  std::size_t total = 0;

  bool operator==(const IterationStats&) const = default;
};

struct ExactPathResult {
  SelectionPath path;
  IterationStats stats;
};

// Penalty at which the cost lines loss_a + lambda * complexity_a and
// loss_b + lambda * complexity_b intersect. Requires complexity_b >
// complexity_a and loss_a > loss_b; throws DegenerateCrossing otherwise, or
// when the result over/underflows.
inline double crossover_penalty(double loss_a, double complexity_a,
                                double loss_b, double complexity_b) {
  if (!(complexity_b > complexity_a)) {
    throw Error(ErrorCode::DegenerateCrossing,
                "complexities must be strictly increasing");
  }
  const double lambda = (loss_a - loss_b) / (complexity_b - complexity_a);
  if (!(lambda > 0.0 && lambda < kInfinity)) {
    throw Error(ErrorCode::DegenerateCrossing,
                "crossover penalty is not strictly positive and finite");
  }
  return lambda;
}

// Linear time dynamic program over t = 1..N. Each step drops the stored
// breakpoints that the new cost line dominates (candidate >= stored) and
// appends one breakpoint for model t. Uses three arrays of length N.
ExactPathResult exact_path(const LossSequence& input);

// Smallest k minimizing L_k + penalty * r_k, by direct O(N) scan.
std::size_t evaluate_selection(const LossSequence& input, double penalty);

// O(log M) lookup. A penalty equal to a finite breakpoint selects the model on
// the higher-penalty side, i.e. the smaller one.
std::size_t query_path(const SelectionPath& path, double penalty);

// Drops interior models whose interval is narrower than `epsilon`, replacing
// their two bounding breakpoints with the midpoint. The first and last models
// are always kept. epsilon <= 0 returns the path unchanged.
SelectionPath filter_narrow_intervals(const SelectionPath& path, double epsilon);

// Throws NegativePenalty or NonFiniteValue.
void check_penalty(double penalty);

}  // namespace l0path
