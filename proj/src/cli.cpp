#include "l0path/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "l0path/baselines.hpp"
#include "l0path/bench.hpp"
#include "l0path/csv.hpp"
#include "l0path/error.hpp"
#include "l0path/penalty_intervals.hpp"
#include "l0path/segmentation.hpp"
#include "l0path/selection.hpp"

namespace l0path::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads a whole file (or `in` for "-") into memory.
std::string slurp(const std::string& name, std::istream& in) {
  std::ostringstream buffer;
  if (name == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(name, std::ios::binary);
  if (!file) throw IoError("cannot open '" + name + "' for reading");
  buffer << file.rdbuf();
  if (file.bad()) throw IoError("error while reading '" + name + "'");
  return buffer.str();
}

void emit(const std::string& target, const std::string& text, std::ostream& out) {
  if (target.empty() || target == "-") {
    out << text;
    return;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file) throw IoError("cannot open '" + target + "' for writing");
  file << text;
  if (!file) throw IoError("error while writing '" + target + "'");
}

struct Losses {
  LossSequence sequence;
  std::vector<std::size_t> labels;  // printed model size per sequence entry
  std::vector<std::size_t> rows;    // 0-based input row per sequence entry
};

Losses load_losses(const std::string& name, std::istream& in, bool prune) {
  std::istringstream text(slurp(name, in));
  const auto table = csv::read_losses(text);
  const auto complexities = table.effective_complexities();
  std::vector<std::size_t> rows;
  if (prune) {
    auto pruned = prune_dominated(table.losses, std::span<const double>(complexities));
    for (const auto i : pruned.index_map) rows.push_back(i - 1);
    std::vector<std::size_t> labels;
    for (const auto r : rows) labels.push_back(table.model_sizes[r]);
    return {std::move(pruned.losses), std::move(labels), std::move(rows)};
  }
  auto sequence = validate_losses(table.losses, std::span<const double>(complexities));
  for (std::size_t i = 0; i < table.losses.size(); ++i) rows.push_back(i);
  return {std::move(sequence), table.model_sizes, std::move(rows)};
}

struct PathOptions {
  std::string input;
  std::string algorithm = "linear";
  bool prune = false;
  double epsilon = 0.0;
  std::string stats;
  std::string output;
};

void run_path(const PathOptions& o, std::istream& in, std::ostream& out) {
  const auto losses = load_losses(o.input, in, o.prune);
  SelectionPath path;
  std::optional<IterationStats> stats;
  if (o.algorithm == "quadratic") {
    if (!o.stats.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "iteration stats are only produced by the linear algorithm");
    }
    path = quadratic_path(losses.sequence);
  } else {
    auto result = exact_path(losses.sequence);
    path = std::move(result.path);
    stats = std::move(result.stats);
  }
  path = filter_narrow_intervals(path, o.epsilon);

  std::ostringstream text;
  csv::write_path(text, path, losses.labels);
  emit(o.output, text.str(), out);
  if (!o.stats.empty()) {
    std::ostringstream stats_text;
    csv::write_stats(stats_text, *stats);
    emit(o.stats, stats_text.str(), out);
  }
}

struct GridOptions {
  std::string input;
  std::vector<double> grid;
  std::size_t count = 10;
  bool prune = false;
  std::string output;
};

void run_grid(const GridOptions& o, bool explicit_grid, std::istream& in,
              std::ostream& out) {
  const auto losses = load_losses(o.input, in, o.prune);
  const auto penalties = explicit_grid ? o.grid : default_grid(losses.sequence, o.count);
  const auto result = grid_search(losses.sequence, penalties);
  std::ostringstream text;
  csv::write_grid(text, result, losses.labels);
  emit(o.output, text.str(), out);
}

struct BinsegOptions {
  std::string input;
  std::size_t max_models = 0;
  bool exact = false;
  std::string changepoints;
  std::string output;
};

void run_binseg(const BinsegOptions& o, std::istream& in, std::ostream& out) {
  std::istringstream text(slurp(o.input, in));
  const auto data = csv::read_data(text);
  const std::size_t k = o.max_models == 0 ? data.size() : o.max_models;
  const auto path = o.exact ? exact_segmentation(data, k) : binary_segmentation(data, k);
  std::ostringstream losses;
  csv::write_losses(losses, path.losses());
  emit(o.output, losses.str(), out);
  if (!o.changepoints.empty()) {
    std::ostringstream cps;
    csv::write_changepoints(cps, path);
    emit(o.changepoints, cps.str(), out);
  }
}

struct SynthOptions {
  std::string kind;
  std::size_t n = 0;
  std::string output;
};

void run_synth(const SynthOptions& o, std::ostream& out) {
  std::ostringstream text;
  if (o.kind == "data") {
    csv::write_data(text, synth_data(o.n));
  } else {
    const auto shape = o.kind == "losses-linear" ? LossShape::Linear : LossShape::Sqrt;
    csv::write_losses(text, synth_losses(o.n, shape).losses());
  }
  emit(o.output, text.str(), out);
}

struct BenchCliOptions {
  std::string scenario;
  bench::BenchOptions options;
  std::string output;
};

void run_bench(const BenchCliOptions& o, std::ostream& out) {
  const auto records = bench::run(bench::parse_scenario(o.scenario), o.options);
  std::ostringstream text;
  bench::write_records(text, records);
  emit(o.output, text.str(), out);
}

struct TargetOptions {
  std::string input;
  std::string errors;
  bool prune = false;
  bool widest = false;
  std::string output;
};

void run_targets(const TargetOptions& o, std::istream& in, std::ostream& out) {
  const auto losses = load_losses(o.input, in, o.prune);
  std::istringstream error_text(slurp(o.errors, in));
  const auto all_errors = csv::read_errors(error_text);
  // Rows of the errors file align with rows of the losses file.
  ErrorCurve curve;
  for (const auto r : losses.rows) {
    if (r >= all_errors.model_errors.size()) {
      throw Error(ErrorCode::LengthMismatch,
                  "errors file has fewer rows than the losses file");
    }
    curve.model_errors.push_back(all_errors.model_errors[r]);
  }
  if (!o.prune && all_errors.model_errors.size() != losses.rows.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "errors file and losses file have different row counts");
  }
  auto set = target_intervals(exact_path(losses.sequence).path, curve);
  if (o.widest) set.intervals = {widest_target(set)};
  std::ostringstream text;
  csv::write_intervals(text, set);
  emit(o.output, text.str(), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact penalized model selection paths from decreasing loss values"};
  app.name("l0path");
  app.require_subcommand(1);

  PathOptions path_opts;
  auto* path_cmd = app.add_subcommand("path", "Exact path of selected models and breakpoints");
  path_cmd->add_option("losses", path_opts.input, "losses CSV (model_size,loss[,complexity]); - for stdin")
      ->required();
  path_cmd->add_option("--algorithm", path_opts.algorithm, "linear or quadratic")
      ->check(CLI::IsMember({"linear", "quadratic"}));
  path_cmd->add_flag("--prune", path_opts.prune, "drop models that are never selected");
  path_cmd->add_option("--epsilon", path_opts.epsilon,
                       "merge interior intervals narrower than this")
      ->check(CLI::NonNegativeNumber);
  path_cmd->add_option("--stats", path_opts.stats, "write iteration stats CSV here");
  path_cmd->add_option("--output,-o", path_opts.output, "path CSV destination");

  GridOptions grid_opts;
  auto* grid_cmd = app.add_subcommand("gridsearch", "Approximate path by grid search");
  grid_cmd->add_option("losses", grid_opts.input, "losses CSV; - for stdin")->required();
  auto* grid_list = grid_cmd->add_option("--grid", grid_opts.grid,
                                         "explicit comma separated penalties")
                        ->delimiter(',');
  auto* grid_count = grid_cmd->add_option("--count", grid_opts.count,
                                          "size of the default geometric grid");
  grid_list->excludes(grid_count);
  grid_cmd->add_flag("--prune", grid_opts.prune, "drop models that are never selected");
  grid_cmd->add_option("--output,-o", grid_opts.output, "grid CSV destination");

  BinsegOptions binseg_opts;
  auto* binseg_cmd = app.add_subcommand("binseg", "Square loss segmentation path");
  binseg_cmd->add_option("data", binseg_opts.input, "data CSV (index,value); - for stdin")
      ->required();
  binseg_cmd->add_option("--max-models", binseg_opts.max_models,
                         "largest model size (default: number of data)");
  binseg_cmd->add_flag("--exact", binseg_opts.exact,
                       "optimal segmentation by dynamic programming");
  binseg_cmd->add_option("--changepoints", binseg_opts.changepoints,
                         "write changepoints CSV here");
  binseg_cmd->add_option("--output,-o", binseg_opts.output, "losses CSV destination");

  SynthOptions synth_opts;
  auto* synth_cmd = app.add_subcommand("synth", "Synthetic data or loss sequences");
  synth_cmd->add_option("kind", synth_opts.kind, "data, losses-linear or losses-sqrt")
      ->required()
      ->check(CLI::IsMember({"data", "losses-linear", "losses-sqrt"}));
  synth_cmd->add_option("--n", synth_opts.n, "sequence length")
      ->required()
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--output,-o", synth_opts.output, "CSV destination");

  BenchCliOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Timing experiments");
  bench_cmd->add_option("scenario", bench_opts.scenario,
                        "selection-scaling, pipeline or gridsearch-compare")
      ->required()
      ->check(CLI::IsMember({"selection-scaling", "pipeline", "gridsearch-compare"}));
  bench_cmd->add_option("--sizes", bench_opts.options.sizes, "input sizes")->delimiter(',');
  bench_cmd->add_option("--repeats", bench_opts.options.repeats, "timed runs per row")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--grid-sizes", bench_opts.options.grid_sizes,
                        "grid sizes for gridsearch-compare")
      ->delimiter(',');
  bench_cmd->add_option("--grid-n", bench_opts.options.grid_n,
                        "loss sequence length for gridsearch-compare");
  bench_cmd->add_option("--output,-o", bench_opts.output, "bench CSV destination");

  TargetOptions target_opts;
  auto* target_cmd = app.add_subcommand("targets", "Penalty intervals with minimal error");
  target_cmd->add_option("losses", target_opts.input, "losses CSV; - for stdin")->required();
  target_cmd->add_option("--errors", target_opts.errors, "errors CSV (model_size,error)")
      ->required();
  target_cmd->add_flag("--prune", target_opts.prune, "drop models that are never selected");
  target_cmd->add_flag("--widest", target_opts.widest,
                       "only print the widest interval in log-penalty space");
  target_cmd->add_option("--output,-o", target_opts.output, "interval CSV destination");

  std::vector<std::string> argv_storage{"l0path"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "l0path: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*path_cmd) run_path(path_opts, in, out);
    if (*grid_cmd) run_grid(grid_opts, grid_list->count() > 0, in, out);
    if (*binseg_cmd) run_binseg(binseg_opts, in, out);
    if (*synth_cmd) run_synth(synth_opts, out);
    if (*bench_cmd) run_bench(bench_opts, out);
    if (*target_cmd) run_targets(target_opts, in, out);
  } catch (const IoError& e) {
    err << "l0path: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "l0path: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace l0path::cli
