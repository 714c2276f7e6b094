#include "l0path/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "l0path/error.hpp"

namespace l0path {

QuadraticPathResult quadratic_path_counted(const LossSequence& input) {
  const auto loss = input.losses();
  const auto complexity = input.complexities();
  QuadraticPathResult result;

  // Collected from the largest model down, reversed at the end.
  std::vector<std::size_t> models{input.size() - 1};
  std::vector<double> breakpoints{0.0};
  std::size_t current = input.size() - 1;
  while (current > 0) {
    std::size_t best = 0;
    double best_lambda = kInfinity;
    for (std::size_t k = 0; k < current; ++k) {
      const double lambda = crossover_penalty(loss[k], complexity[k],
                                              loss[current], complexity[current]);
      if (lambda < best_lambda) {
        best_lambda = lambda;
        best = k;
      }
    }
    result.crossover_evaluations += current;
    models.push_back(best);
    breakpoints.push_back(best_lambda);
    current = best;
  }
  breakpoints.push_back(kInfinity);

  result.path.models.reserve(models.size());
  for (auto it = models.rbegin(); it != models.rend(); ++it) {
    result.path.models.push_back(*it + 1);
  }
  result.path.breakpoints.assign(breakpoints.rbegin(), breakpoints.rend());
  return result;
}

GridResult grid_search(const LossSequence& input, std::span<const double> penalties) {
  if (penalties.empty()) {
    throw Error(ErrorCode::EmptyGrid, "no penalties in grid");
  }
  for (std::size_t i = 0; i < penalties.size(); ++i) {
    if (!std::isfinite(penalties[i])) {
      throw Error(ErrorCode::NonFiniteValue,
                  "grid penalty at index " + std::to_string(i) + " is not finite", i);
    }
    if (!(penalties[i] > 0.0)) {
      throw Error(ErrorCode::NegativePenalty,
                  "grid penalty at index " + std::to_string(i) + " is not positive", i);
    }
    if (i > 0 && !(penalties[i - 1] < penalties[i])) {
      throw Error(ErrorCode::UnsortedGrid,
                  "grid penalty at index " + std::to_string(i) +
                      " is not strictly above the previous one",
                  i);
    }
  }

  GridResult result;
  result.penalties.assign(penalties.begin(), penalties.end());
  result.selected.reserve(penalties.size());
  for (const double lambda : penalties) {
    result.selected.push_back(evaluate_selection(input, lambda));
  }
  for (std::size_t i = penalties.size() - 1; i > 0; --i) {
    if (result.selected[i] != result.selected[i - 1]) {
      result.approx_breakpoints.push_back(std::sqrt(penalties[i - 1] * penalties[i]));
    }
  }
  return result;
}

std::vector<double> default_grid(const LossSequence& input, std::size_t count) {
  if (count == 0) {
    throw Error(ErrorCode::EmptyGrid, "grid size must be at least 1");
  }
  if (input.size() < 2) {
    throw Error(ErrorCode::DegenerateRange,
                "a single model has no crossover penalty to span");
  }
  const auto loss = input.losses();
  const auto complexity = input.complexities();
  double hi = 0.0;
  for (std::size_t k = 1; k < input.size(); ++k) {
    hi = std::max(hi, crossover_penalty(loss[0], complexity[0], loss[k], complexity[k]));
  }
  const double lo = hi / 1e6;
  if (count == 1) return {std::sqrt(lo * hi)};

  std::vector<double> grid(count);
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / static_cast<double>(count - 1);
  grid.front() = lo;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    grid[i] = std::exp(log_lo + step * static_cast<double>(i));
  }
  grid.back() = hi;
  return grid;
}

}  // namespace l0path
