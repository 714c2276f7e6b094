#include "l0path/penalty_intervals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "l0path/error.hpp"

namespace l0path {
namespace {

void check_errors(const ErrorCurve& errors, std::size_t needed) {
  if (errors.model_errors.size() != needed) {
    throw Error(ErrorCode::LengthMismatch,
                "error curve has " + std::to_string(errors.model_errors.size()) +
                    " entries, expected " + std::to_string(needed));
  }
  for (std::size_t i = 0; i < needed; ++i) {
    const double e = errors.model_errors[i];
    if (!std::isfinite(e) || e < 0.0) {
      throw Error(ErrorCode::InvalidError,
                  "error at index " + std::to_string(i) +
                      " is not a finite non-negative number",
                  i);
    }
  }
}

}  // namespace

PenaltyIntervalSet target_intervals(const SelectionPath& path, const ErrorCurve& errors) {
  check_errors(errors, path.models.back());
  const auto error_of = [&](std::size_t j) {
    return errors.model_errors[path.models[j] - 1];
  };

  PenaltyIntervalSet out;
  out.min_error = error_of(0);
  for (std::size_t j = 1; j < path.size(); ++j) {
    out.min_error = std::min(out.min_error, error_of(j));
  }

  // Walk from the largest model (smallest penalties) upwards.
  bool open = false;
  for (std::size_t j = path.size(); j-- > 0;) {
    if (error_of(j) != out.min_error) {
      open = false;
      continue;
    }
    const double lo = path.breakpoints[j + 1];
    const double hi = path.breakpoints[j];
    if (open) {
      out.intervals.back().hi = hi;
    } else {
      out.intervals.push_back({lo, hi});
      open = true;
    }
  }
  return out;
}

PenaltyInterval widest_target(const PenaltyIntervalSet& set) {
  if (set.intervals.empty()) {
    throw Error(ErrorCode::EmptyIntervalSet, "no intervals to choose from");
  }
  const auto log_width = [](const PenaltyInterval& in) {
    if (in.lo <= 0.0 || std::isinf(in.hi)) return kInfinity;
    return std::log(in.hi / in.lo);
  };
  const PenaltyInterval* best = &set.intervals.front();
  double best_width = log_width(*best);
  for (const auto& in : set.intervals) {
    const double w = log_width(in);
    if (w >= best_width) {
      best = &in;
      best_width = w;
    }
  }
  return *best;
}

PenaltyIntervalSet grid_target_intervals(const GridResult& grid, const ErrorCurve& errors) {
  std::size_t largest = 0;
  for (const auto k : grid.selected) largest = std::max(largest, k);
  if (errors.model_errors.size() < largest) {
    throw Error(ErrorCode::LengthMismatch,
                "error curve does not cover model " + std::to_string(largest));
  }
  check_errors(errors, errors.model_errors.size());

  PenaltyIntervalSet out;
  if (grid.selected.empty()) return out;
  const auto error_at = [&](std::size_t i) {
    return errors.model_errors[grid.selected[i] - 1];
  };
  out.min_error = error_at(0);
  for (std::size_t i = 1; i < grid.selected.size(); ++i) {
    out.min_error = std::min(out.min_error, error_at(i));
  }
  // Neighbouring grid points only vouch for the penalties between them when
  // they select the same model; otherwise an unseen model may sit in between.
  bool open = false;
  for (std::size_t i = 0; i < grid.selected.size(); ++i) {
    if (error_at(i) != out.min_error) {
      open = false;
      continue;
    }
    if (open && grid.selected[i] == grid.selected[i - 1]) {
      out.intervals.back().hi = grid.penalties[i];
    } else {
      out.intervals.push_back({grid.penalties[i], grid.penalties[i]});
      open = true;
    }
  }
  return out;
}

}  // namespace l0path
