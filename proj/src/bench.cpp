#include "l0path/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>

#include "l0path/baselines.hpp"
#include "l0path/csv.hpp"
#include "l0path/error.hpp"
#include "l0path/segmentation.hpp"
#include "l0path/selection.hpp"

namespace l0path::bench {
namespace {

BenchRecord record(std::string algorithm, std::size_t n, const Timing& timing) {
  BenchRecord r;
  r.algorithm = std::move(algorithm);
  r.n = n;
  r.seconds = timing.median;
  r.mean_seconds = timing.mean;
  r.sd_seconds = timing.sd;
  return r;
}

// Keeps results observable so the optimizer cannot drop timed work.
volatile std::size_t sink = 0;

LossSequence binseg_losses(const DataSequence& data) {
  const auto seg = binary_segmentation(data, data.size());
  return prune_dominated(seg.losses()).losses;
}

}  // namespace

Timing time_repeats(const std::function<void()>& fn, std::size_t repeats) {
  if (repeats == 0) throw Error(ErrorCode::InvalidArgument, "repeats must be at least 1");
  fn();
  std::vector<double> seconds;
  seconds.reserve(repeats);
  for (std::size_t i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    seconds.push_back(std::chrono::duration<double>(stop - start).count());
  }
  Timing t;
  t.mean = std::accumulate(seconds.begin(), seconds.end(), 0.0) /
           static_cast<double>(repeats);
  double ss = 0.0;
  for (const double s : seconds) ss += (s - t.mean) * (s - t.mean);
  t.sd = repeats > 1 ? std::sqrt(ss / static_cast<double>(repeats - 1)) : 0.0;
  std::sort(seconds.begin(), seconds.end());
  const std::size_t mid = repeats / 2;
  t.median = repeats % 2 == 1 ? seconds[mid] : (seconds[mid - 1] + seconds[mid]) / 2.0;
  // steady_clock ticks are nanoseconds; report at least one tick.
  t.median = std::max(t.median, 1e-9);
  return t;
}

Scenario parse_scenario(const std::string& name) {
  if (name == "selection-scaling") return Scenario::SelectionScaling;
  if (name == "pipeline") return Scenario::Pipeline;
  if (name == "gridsearch-compare") return Scenario::GridsearchCompare;
  throw Error(ErrorCode::ParseError, "unknown scenario '" + name + "'");
}

std::vector<BenchRecord> run(Scenario scenario, const BenchOptions& options) {
  if (options.repeats == 0) {
    throw Error(ErrorCode::InvalidArgument, "repeats must be at least 1");
  }
  std::vector<BenchRecord> records;

  if (scenario == Scenario::GridsearchCompare) {
    if (options.grid_n < 2) {
      throw Error(ErrorCode::InvalidArgument, "loss sequence length must be at least 2");
    }
    const auto losses = synth_losses(options.grid_n, LossShape::Sqrt);
    std::size_t iterations = 0;
    auto linear = record("linear", options.grid_n, time_repeats([&] {
                           const auto r = exact_path(losses);
                           iterations = r.stats.total;
                           sink = sink + r.path.size();
                         }, options.repeats));
    linear.iterations = iterations;
    records.push_back(linear);
    for (const std::size_t g : options.grid_sizes) {
      const auto grid = default_grid(losses, g);
      auto row = record("gridsearch", options.grid_n, time_repeats([&] {
                          sink = sink + grid_search(losses, grid).selected.size();
                        }, options.repeats));
      row.g = g;
      records.push_back(row);
    }
    return records;
  }

  for (const std::size_t n : options.sizes) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "sizes must be at least 2");
    if (scenario == Scenario::SelectionScaling) {
      const auto losses = synth_losses(n, LossShape::Sqrt);
      std::size_t iterations = 0;
      auto linear = record("linear", n, time_repeats([&] {
                             const auto r = exact_path(losses);
                             iterations = r.stats.total;
                             sink = sink + r.path.size();
                           }, options.repeats));
      linear.iterations = iterations;
      records.push_back(linear);
      records.push_back(record("quadratic", n, time_repeats([&] {
                                 sink = sink + quadratic_path(losses).size();
                               }, options.repeats)));
      continue;
    }

    const auto data = synth_data(n);
    const auto losses = binseg_losses(data);
    records.push_back(record("binseg", n, time_repeats([&] {
                               sink = sink + binary_segmentation(data, n).size();
                             }, options.repeats)));
    std::size_t iterations = 0;
    auto linear = record("linear", n, time_repeats([&] {
                           const auto r = exact_path(losses);
                           iterations = r.stats.total;
                           sink = sink + r.path.size();
                         }, options.repeats));
    linear.iterations = iterations;
    records.push_back(linear);
    records.push_back(record("quadratic", n, time_repeats([&] {
                               sink = sink + quadratic_path(losses).size();
                             }, options.repeats)));
    auto pipeline_linear = record("binseg.linear", n, time_repeats([&] {
                                    const auto r = exact_path(binseg_losses(data));
                                    iterations = r.stats.total;
                                    sink = sink + r.path.size();
                                  }, options.repeats));
    pipeline_linear.iterations = iterations;
    records.push_back(pipeline_linear);
    records.push_back(record("binseg.quadratic", n, time_repeats([&] {
                               sink = sink + quadratic_path(binseg_losses(data)).size();
                             }, options.repeats)));
  }
  return records;
}

void write_records(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "algorithm,n,g,seconds,iterations,mean_seconds,sd_seconds\n";
  for (const auto& r : records) {
    out << r.algorithm << ',' << r.n << ',';
    if (r.g) out << *r.g;
    out << ',' << csv::format_double(r.seconds) << ',';
    if (r.iterations) out << *r.iterations;
    out << ',' << csv::format_double(r.mean_seconds) << ','
        << csv::format_double(r.sd_seconds) << '\n';
  }
}

}  // namespace l0path::bench
