#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "l0path/baselines.hpp"
#include "l0path/selection.hpp"

namespace l0path {

// Label error of every model 1..N of a loss sequence. Values are finite and
// non-negative (checked by target_intervals).
struct ErrorCurve {
  std::vector<double> model_errors;
};

struct PenaltyInterval {
  double lo = 0.0;
  double hi = kInfinity;

  bool operator==(const PenaltyInterval&) const = default;
};

// Disjoint open intervals in increasing order, each selecting only models
// with error min_error.
struct PenaltyIntervalSet {
  std::vector<PenaltyInterval> intervals;
  double min_error = 0.0;
};

// Maps each path interval to its model's error and returns the maximal runs
// achieving the minimum over selectable models. Models that no penalty
// selects are ignored. Throws LengthMismatch when the curve does not cover
// path.models.back() entries, InvalidError for negative or non-finite errors.
PenaltyIntervalSet target_intervals(const SelectionPath& path, const ErrorCurve& errors);

// Widest interval in log-penalty space. Intervals touching 0 or +inf are
// unbounded and beat bounded ones; ties go to the larger-penalty interval.
// Throws EmptyIntervalSet.
PenaltyInterval widest_target(const PenaltyIntervalSet& set);

// What a grid search can recover from the same error curve: maximal runs of
// consecutive grid penalties that select the same model, with that model
// attaining the smallest error seen on the grid, as closed ranges
// [first, last]. Since the selection function is monotone, every penalty in
// such a range selects that model.
PenaltyIntervalSet grid_target_intervals(const GridResult& grid, const ErrorCurve& errors);

}  // namespace l0path
