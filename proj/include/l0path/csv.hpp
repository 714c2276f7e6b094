#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "l0path/baselines.hpp"
#include "l0path/penalty_intervals.hpp"
#include "l0path/segmentation.hpp"
#include "l0path/selection.hpp"

namespace l0path::csv {

// Shortest decimal that parses back to the same double; +inf is "inf".
std::string format_double(double value);
// Accepts anything format_double produces, plus "+inf"/"Inf"/"infinity".
// Throws ParseError.
double parse_double(std::string_view text);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Comma separated, first line is the header, blank lines ignored, CRLF
// tolerated. Every row must have as many fields as the header.
Table read_table(std::istream& in);

// Contents of a `model_size,loss[,complexity]` file. Model sizes are
// strictly increasing positive integers.
struct LossTable {
  std::vector<std::size_t> model_sizes;
  std::vector<double> losses;
  std::optional<std::vector<double>> complexities;

  // Complexities used for path computation: the explicit column when
  // present, otherwise the model sizes.
  std::vector<double> effective_complexities() const;
};

LossTable read_losses(std::istream& in);
void write_losses(std::ostream& out, std::span<const double> losses);

// `index,value`, indices 1..p.
DataSequence read_data(std::istream& in);
void write_data(std::ostream& out, const DataSequence& data);

// `model_size,error`, one row per model of the matching losses file.
ErrorCurve read_errors(std::istream& in);

// `model_size,min_lambda,max_lambda`. `labels[m - 1]` is printed for model m
// when given.
void write_path(std::ostream& out, const SelectionPath& path,
                std::span<const std::size_t> labels = {});
// Inverse of write_path (models become the printed model sizes).
SelectionPath read_path(std::istream& in);

// `t,w` for t = 2..N.
void write_stats(std::ostream& out, const IterationStats& stats);

// `lambda,model_size` rows, then an `approx_breakpoint` section.
void write_grid(std::ostream& out, const GridResult& grid,
                std::span<const std::size_t> labels = {});

// `min_lambda,max_lambda,min_error`.
void write_intervals(std::ostream& out, const PenaltyIntervalSet& set);

// `model_size,changepoint`, one row per changepoint of every model.
void write_changepoints(std::ostream& out, const SegmentationPath& path);

}  // namespace l0path::csv
