#include "l0path/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "l0path/error.hpp"

namespace l0path::csv {
namespace {

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorCode::ParseError, message);
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = line.find(',', begin);
    const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
    std::string_view field = line.substr(begin, end - begin);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
    fields.emplace_back(field);
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  return fields;
}

std::size_t parse_size(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    parse_error("expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

void expect_header(const Table& table, std::span<const std::string_view> required,
                   std::size_t max_columns) {
  if (table.header.size() < required.size() || table.header.size() > max_columns) {
    parse_error("unexpected number of columns in header");
  }
  for (std::size_t i = 0; i < required.size(); ++i) {
    if (table.header[i] != required[i]) {
      parse_error("expected column '" + std::string(required[i]) + "', got '" +
                  table.header[i] + "'");
    }
  }
}

std::vector<std::size_t> read_model_sizes(const Table& table) {
  std::vector<std::size_t> sizes;
  sizes.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    const std::size_t k = parse_size(row[0]);
    if (k == 0 || (!sizes.empty() && k <= sizes.back())) {
      parse_error("model_size values must be strictly increasing positive integers");
    }
    sizes.push_back(k);
  }
  return sizes;
}

std::size_t label(std::span<const std::size_t> labels, std::size_t model) {
  return labels.empty() ? model : labels[model - 1];
}

}  // namespace

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

double parse_double(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "Inf" || text == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    parse_error("expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

Table read_table(std::istream& in) {
  Table table;
  std::string line;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto fields = split(line);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      parse_error("line " + std::to_string(line_no) + " has " +
                  std::to_string(fields.size()) + " fields, expected " +
                  std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (!have_header) parse_error("empty input, expected a header line");
  return table;
}

std::vector<double> LossTable::effective_complexities() const {
  if (complexities) return *complexities;
  return std::vector<double>(model_sizes.begin(), model_sizes.end());
}

LossTable read_losses(std::istream& in) {
  const Table table = read_table(in);
  static constexpr std::string_view kRequired[] = {"model_size", "loss"};
  expect_header(table, kRequired, 3);
  if (table.header.size() == 3 && table.header[2] != "complexity") {
    parse_error("third column must be 'complexity', got '" + table.header[2] + "'");
  }
  LossTable out;
  out.model_sizes = read_model_sizes(table);
  for (const auto& row : table.rows) out.losses.push_back(parse_double(row[1]));
  if (table.header.size() == 3) {
    out.complexities.emplace();
    for (const auto& row : table.rows) out.complexities->push_back(parse_double(row[2]));
  }
  return out;
}

void write_losses(std::ostream& out, std::span<const double> losses) {
  out << "model_size,loss\n";
  for (std::size_t i = 0; i < losses.size(); ++i) {
    out << i + 1 << ',' << format_double(losses[i]) << '\n';
  }
}

DataSequence read_data(std::istream& in) {
  const Table table = read_table(in);
  static constexpr std::string_view kRequired[] = {"index", "value"};
  expect_header(table, kRequired, 2);
  std::vector<double> values;
  values.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (parse_size(table.rows[i][0]) != i + 1) {
      parse_error("index column must count 1, 2, 3, ...");
    }
    values.push_back(parse_double(table.rows[i][1]));
  }
  return DataSequence(std::move(values));
}

void write_data(std::ostream& out, const DataSequence& data) {
  out << "index,value\n";
  const auto values = data.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << i + 1 << ',' << format_double(values[i]) << '\n';
  }
}

ErrorCurve read_errors(std::istream& in) {
  const Table table = read_table(in);
  static constexpr std::string_view kRequired[] = {"model_size", "error"};
  expect_header(table, kRequired, 2);
  read_model_sizes(table);
  ErrorCurve curve;
  for (const auto& row : table.rows) curve.model_errors.push_back(parse_double(row[1]));
  return curve;
}

void write_path(std::ostream& out, const SelectionPath& path,
                std::span<const std::size_t> labels) {
  out << "model_size,min_lambda,max_lambda\n";
  for (std::size_t j = 0; j < path.size(); ++j) {
    out << label(labels, path.models[j]) << ',' << format_double(path.breakpoints[j + 1])
        << ',' << format_double(path.breakpoints[j]) << '\n';
  }
}

SelectionPath read_path(std::istream& in) {
  const Table table = read_table(in);
  static constexpr std::string_view kRequired[] = {"model_size", "min_lambda",
                                                   "max_lambda"};
  expect_header(table, kRequired, 3);
  if (table.rows.empty()) parse_error("path has no rows");
  SelectionPath path;
  path.models = read_model_sizes(table);
  path.breakpoints.push_back(parse_double(table.rows.front()[2]));
  for (const auto& row : table.rows) {
    if (parse_double(row[2]) != path.breakpoints.back()) {
      parse_error("max_lambda of a row must equal min_lambda of the previous row");
    }
    path.breakpoints.push_back(parse_double(row[1]));
  }
  if (!std::isinf(path.breakpoints.front()) || path.breakpoints.back() != 0.0) {
    parse_error("path must span penalties from 0 to inf");
  }
  return path;
}

void write_stats(std::ostream& out, const IterationStats& stats) {
  out << "t,w\n";
  for (std::size_t i = 0; i < stats.per_step.size(); ++i) {
    out << i + 2 << ',' << stats.per_step[i] << '\n';
  }
}

void write_grid(std::ostream& out, const GridResult& grid,
                std::span<const std::size_t> labels) {
  out << "lambda,model_size\n";
  for (std::size_t i = 0; i < grid.penalties.size(); ++i) {
    out << format_double(grid.penalties[i]) << ',' << label(labels, grid.selected[i])
        << '\n';
  }
  out << "approx_breakpoint\n";
  for (const double b : grid.approx_breakpoints) out << format_double(b) << '\n';
}

void write_intervals(std::ostream& out, const PenaltyIntervalSet& set) {
  out << "min_lambda,max_lambda,min_error\n";
  for (const auto& in : set.intervals) {
    out << format_double(in.lo) << ',' << format_double(in.hi) << ','
        << format_double(set.min_error) << '\n';
  }
}

void write_changepoints(std::ostream& out, const SegmentationPath& path) {
  out << "model_size,changepoint\n";
  for (std::size_t k = 2; k <= path.size(); ++k) {
    for (const std::size_t cp : path.changepoints(k)) out << k << ',' << cp << '\n';
  }
}

}  // namespace l0path::csv
