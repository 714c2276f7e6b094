#include "l0path/selection.hpp"

#include <algorithm>
#include <string>

namespace l0path {

void check_penalty(double penalty) {
  if (std::isnan(penalty) || std::isinf(penalty)) {
    throw Error(ErrorCode::NonFiniteValue, "penalty must be finite");
  }
  if (penalty < 0.0) {
    throw Error(ErrorCode::NegativePenalty,
                "penalty " + std::to_string(penalty) + " is negative");
  }
}

ExactPathResult exact_path(const LossSequence& input) {
  const std::size_t n = input.size();
  const auto loss = input.losses();
  const auto complexity = input.complexities();

  // Slot i holds a selected model and the upper end of its interval; slot 0
  // is the smallest model with upper end +inf. The slots are built directly
  // in the output vectors, which are trimmed to the final size at the end.
  ExactPathResult result;
  auto& models = result.path.models;
  auto& upper = result.path.breakpoints;
  auto& iterations = result.stats.per_step;
  models.resize(n);
  upper.resize(n + 1);
  iterations.resize(n - 1);

  std::size_t count = 1;
  models[0] = 1;
  upper[0] = kInfinity;

  std::size_t total = 0;
  for (std::size_t t = 1; t < n; ++t) {
    std::size_t i = count - 1;
    std::size_t w = 1;
    double lambda;
    // Terminates at slot 0 at the latest since upper[0] is +inf.
    while ((lambda = crossover_penalty(loss[models[i] - 1], complexity[models[i] - 1],
                                       loss[t], complexity[t])) >= upper[i]) {
      --i;
      ++w;
    }
    count = i + 2;
    upper[i + 1] = lambda;
    models[i + 1] = t + 1;
    iterations[t - 1] = w;
    total += w;
  }

  models.resize(count);
  upper.resize(count + 1);
  upper[count] = 0.0;
  result.stats.total = total;
  return result;
}

std::size_t evaluate_selection(const LossSequence& input, double penalty) {
  check_penalty(penalty);
  const auto loss = input.losses();
  const auto complexity = input.complexities();
  std::size_t best = 0;
  double best_cost = loss[0] + penalty * complexity[0];
  for (std::size_t k = 1; k < loss.size(); ++k) {
    const double cost = loss[k] + penalty * complexity[k];
    if (cost < best_cost) {
      best_cost = cost;
      best = k;
    }
  }
  return best + 1;
}

std::size_t query_path(const SelectionPath& path, double penalty) {
  check_penalty(penalty);
  // First finite breakpoint at or below the penalty; it closes the interval
  // of the model just before it.
  const auto first = path.breakpoints.begin() + 1;
  const auto it = std::partition_point(
      first, path.breakpoints.end(), [penalty](double b) { return b > penalty; });
  if (it == path.breakpoints.end()) return path.models.back();
  return path.models[static_cast<std::size_t>(it - first)];
}

SelectionPath filter_narrow_intervals(const SelectionPath& path, double epsilon) {
  if (!(epsilon > 0.0) || path.size() <= 2) return path;
  SelectionPath out;
  out.models.push_back(path.models.front());
  out.breakpoints.push_back(path.breakpoints[0]);
  out.breakpoints.push_back(path.breakpoints[1]);
  const std::size_t last = path.size() - 1;
  for (std::size_t j = 1; j < last; ++j) {
    // back() is the lower end of the last kept model, i.e. the upper end of
    // model j.
    const double hi = out.breakpoints.back();
    const double lo = path.breakpoints[j + 1];
    if (hi - lo < epsilon) {
      // The model's interval collapses to a single breakpoint between its
      // neighbours.
      out.breakpoints.back() = lo + (hi - lo) / 2.0;
      continue;
    }
    out.models.push_back(path.models[j]);
    out.breakpoints.push_back(lo);
  }
  out.models.push_back(path.models[last]);
  out.breakpoints.push_back(0.0);
  return out;
}

}  // namespace l0path
