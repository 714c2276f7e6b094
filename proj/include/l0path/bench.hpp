#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace l0path::bench {

struct Timing {
  double median = 0.0;
  double mean = 0.0;
  double sd = 0.0;
};

// Runs `fn` once untimed, then `repeats` timed runs (wall clock, seconds).
Timing time_repeats(const std::function<void()>& fn, std::size_t repeats);

struct BenchRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::optional<std::size_t> g;
  double seconds = 0.0;  // median
  double mean_seconds = 0.0;
  double sd_seconds = 0.0;
  std::optional<std::size_t> iterations;
};

enum class Scenario { SelectionScaling, Pipeline, GridsearchCompare };

// Throws Error(ParseError) for unknown names.
Scenario parse_scenario(const std::string& name);

struct BenchOptions {
  std::vector<std::size_t> sizes{100, 1000, 10000};
  std::size_t repeats = 5;
  std::vector<std::size_t> grid_sizes{10, 100, 1000, 10000};
  // Loss sequence length for the grid search comparison.
  std::size_t grid_n = 287443;
};

// Sequential timings:
//   selection-scaling  sqrt losses per size; rows "linear" and "quadratic".
//   pipeline           synthetic data per size; rows "binseg", "linear",
//                      "quadratic", "binseg.linear", "binseg.quadratic".
//   gridsearch-compare sqrt losses of length grid_n; row "linear" plus one
//                      "gridsearch" row per grid size.
// Throws Error for sizes < 2 or repeats == 0.
std::vector<BenchRecord> run(Scenario scenario, const BenchOptions& options);

// `algorithm,n,g,seconds,iterations,mean_seconds,sd_seconds`.
void write_records(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace l0path::bench
