#include "l0path/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "l0path/error.hpp"

namespace l0path {
namespace {

void check_max_models(const DataSequence& data, std::size_t max_models) {
  if (max_models < 1 || max_models > data.size()) {
    throw Error(ErrorCode::MaxModelsOutOfRange,
                "max_models must be in [1, " + std::to_string(data.size()) +
                    "], got " + std::to_string(max_models));
  }
}

// Neumaier compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
  double cost = 0.0;
  // Best split: observations [begin, split) | [split, end).
  std::size_t split = 0;
  double decrease = -1.0;
};

// Evaluates every split of [begin, end) from running means, which stay
// exactly constant on constant data, so ties are exact there.
Segment make_segment(std::span<const double> values, std::size_t begin,
                     std::size_t end, std::vector<double>& suffix_mean) {
  Segment seg{begin, end, segment_cost(values, begin, end)};
  const std::size_t n = end - begin;
  if (n < 2) return seg;

  suffix_mean.resize(n);
  double mean = 0.0;
  for (std::size_t j = end; j-- > begin;) {
    const double count = static_cast<double>(end - j);
    mean += (values[j] - mean) / count;
    suffix_mean[j - begin] = mean;
  }

  double left_mean = 0.0;
  for (std::size_t j = begin; j + 1 < end; ++j) {
    const double nl = static_cast<double>(j - begin + 1);
    const double nr = static_cast<double>(n) - nl;
    left_mean += (values[j] - left_mean) / nl;
    const double diff = left_mean - suffix_mean[j + 1 - begin];
    const double decrease = nl * nr / static_cast<double>(n) * diff * diff;
    if (decrease > seg.decrease) {
      seg.decrease = decrease;
      seg.split = j + 1;
    }
  }
  return seg;
}

struct LowerPriority {
  bool operator()(const Segment& a, const Segment& b) const {
    if (a.decrease != b.decrease) return a.decrease < b.decrease;
    return a.begin > b.begin;
  }
};

}  // namespace

DataSequence::DataSequence(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::EmptyInput, "no data values");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::NonFiniteValue,
                  "data value at index " + std::to_string(i) + " is not finite", i);
    }
  }
}

SegmentationPath SegmentationPath::nested(DataSequence data, std::vector<double> losses,
                                          std::vector<std::size_t> split_order) {
  SegmentationPath path(std::move(data), std::move(losses));
  path.split_order_ = std::move(split_order);
  return path;
}

SegmentationPath SegmentationPath::explicit_lists(
    DataSequence data, std::vector<double> losses,
    std::vector<std::vector<std::size_t>> changepoints) {
  SegmentationPath path(std::move(data), std::move(losses));
  path.lists_ = std::move(changepoints);
  return path;
}

std::vector<std::size_t> SegmentationPath::changepoints(std::size_t k) const {
  if (k < 1 || k > size()) {
    throw Error(ErrorCode::MaxModelsOutOfRange,
                "model size " + std::to_string(k) + " is not in the path");
  }
  if (!lists_.empty()) return lists_[k - 1];
  std::vector<std::size_t> out(split_order_.begin(),
                               split_order_.begin() + static_cast<std::ptrdiff_t>(k - 1));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> SegmentationPath::means(std::size_t k) const {
  const auto cps = changepoints(k);
  const auto values = data_.values();
  std::vector<double> out;
  out.reserve(k);
  std::size_t begin = 0;
  for (std::size_t s = 0; s <= cps.size(); ++s) {
    const std::size_t end = s < cps.size() ? cps[s] : values.size();
    double mean = 0.0;
    for (std::size_t j = begin; j < end; ++j) {
      mean += (values[j] - mean) / static_cast<double>(j - begin + 1);
    }
    out.push_back(mean);
    begin = end;
  }
  return out;
}

double segment_cost(std::span<const double> values, std::size_t begin, std::size_t end) {
  double mean = 0.0;
  for (std::size_t j = begin; j < end; ++j) {
    mean += (values[j] - mean) / static_cast<double>(j - begin + 1);
  }
  double cost = 0.0;
  for (std::size_t j = begin; j < end; ++j) {
    const double d = values[j] - mean;
    cost += d * d;
  }
  return cost;
}

double segmentation_loss(std::span<const double> values,
                         std::span<const std::size_t> changepoints) {
  double total = 0.0;
  std::size_t begin = 0;
  for (const std::size_t cp : changepoints) {
    total += segment_cost(values, begin, cp);
    begin = cp;
  }
  return total + segment_cost(values, begin, values.size());
}

SegmentationPath binary_segmentation(const DataSequence& data, std::size_t max_models) {
  check_max_models(data, max_models);
  const auto values = data.values();

  std::vector<double> scratch;
  std::priority_queue<Segment, std::vector<Segment>, LowerPriority> heap;
  const Segment root = make_segment(values, 0, values.size(), scratch);

  std::vector<double> losses;
  losses.reserve(max_models);
  std::vector<std::size_t> splits;
  splits.reserve(max_models - 1);

  CompensatedSum total;
  total.add(root.cost);
  losses.push_back(root.cost);
  if (root.end - root.begin >= 2) heap.push(root);

  while (losses.size() < max_models) {
    const Segment best = heap.top();
    heap.pop();
    const Segment left = make_segment(values, best.begin, best.split, scratch);
    const Segment right = make_segment(values, best.split, best.end, scratch);
    total.add(-best.cost);
    total.add(left.cost);
    total.add(right.cost);
    // Rounding may nudge the sum up by an ulp when the true decrease is ~0.
    losses.push_back(std::min(losses.back(), std::max(0.0, total.value())));
    splits.push_back(best.split);
    if (left.end - left.begin >= 2) heap.push(left);
    if (right.end - right.begin >= 2) heap.push(right);
  }
  return SegmentationPath::nested(data, std::move(losses), std::move(splits));
}

SegmentationPath exact_segmentation(const DataSequence& data, std::size_t max_models) {
  check_max_models(data, max_models);
  const auto values = data.values();
  const std::size_t p = values.size();
  constexpr double kUnset = std::numeric_limits<double>::infinity();

  // best[j] is the optimal loss of the first j observations with the current
  // number of segments; start[k][j] is where its last segment begins.
  std::vector<double> best(p + 1, kUnset);
  std::vector<double> next(p + 1, kUnset);
  std::vector<std::vector<std::size_t>> start(max_models,
                                              std::vector<std::size_t>(p + 1, 0));
  for (std::size_t j = 1; j <= p; ++j) best[j] = segment_cost(values, 0, j);

  std::vector<double> losses{best[p]};
  for (std::size_t k = 2; k <= max_models; ++k) {
    std::fill(next.begin(), next.end(), kUnset);
    for (std::size_t j = k; j <= p; ++j) {
      // Welford over the last segment [i, j), growing leftwards.
      double mean = 0.0;
      double m2 = 0.0;
      double count = 0.0;
      for (std::size_t i = j; i-- > k - 1;) {
        count += 1.0;
        const double delta = values[i] - mean;
        mean += delta / count;
        m2 += delta * (values[i] - mean);
        const double candidate = best[i] + m2;
        if (candidate < next[j]) {
          next[j] = candidate;
          start[k - 1][j] = i;
        }
      }
    }
    std::swap(best, next);
    losses.push_back(best[p]);
  }

  std::vector<std::vector<std::size_t>> lists(max_models);
  for (std::size_t k = 2; k <= max_models; ++k) {
    std::vector<std::size_t> cps;
    std::size_t end = p;
    for (std::size_t s = k; s >= 2; --s) {
      end = start[s - 1][end];
      cps.push_back(end);
    }
    std::reverse(cps.begin(), cps.end());
    lists[k - 1] = std::move(cps);
  }
  return SegmentationPath::explicit_lists(data, std::move(losses), std::move(lists));
}

DataSequence synth_data(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::EmptyInput, "n must be at least 1");
  std::vector<double> values(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const double x = static_cast<double>(j);
    values[j - 1] = std::sin(x) + x / static_cast<double>(n);
  }
  return DataSequence(std::move(values));
}

LossSequence synth_losses(std::size_t n, LossShape shape) {
  if (n < 1) throw Error(ErrorCode::EmptyInput, "n must be at least 1");
  std::vector<double> losses(n);
  const double top = static_cast<double>(n);
  for (std::size_t t = 1; t <= n; ++t) {
    const double x = static_cast<double>(t);
    losses[t - 1] = shape == LossShape::Linear ? top - x : top - std::sqrt(x);
  }
  return validate_losses(losses);
}

}  // namespace l0path
