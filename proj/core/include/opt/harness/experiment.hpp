#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opt/harness/corpus.hpp"
#include "opt/harness/hyperparams.hpp"
#include "opt/harness/report.hpp"
#include "opt/hraha/types.hpp"

namespace opt::harness {

enum class Method { Proposed, AHA, RFO, PSO, Random };

/// Report label: Proposed, AHA, RFO, PSO, Random.
std::string_view method_label(Method m);
/// Accepts hraha/proposed, aha, rfo, pso, random (case-insensitive) and the
/// report labels.
std::optional<Method> parse_method(std::string_view name);
/// Fixed stream id used for seed derivation, so a method's seeds do not depend
/// on which other methods run.
std::uint64_t method_stream(Method m);

struct BenchmarkTaskConfig {
  std::string function;
  std::size_t dims = 10;
};

struct ClassifierTaskConfig {
  std::filesystem::path corpus;
  CorpusFormat format = CorpusFormat::Csv;
  double split_ratio = 0.8;
  std::uint64_t split_seed = 1;
};

struct ExperimentConfig {
  std::variant<BenchmarkTaskConfig, ClassifierTaskConfig> task;
  HyperparamSpace space;
  std::vector<Method> methods;
  std::size_t pop_size = 30;
  std::size_t iterations = 100;
  std::size_t seeds = 10;
  std::uint64_t master_seed = 1;
  hraha::HrahaConfig hraha;
  std::vector<ReportFormat> formats{ReportFormat::Csv};
  /// Adds a wall_time_s column. Off by default so reports are reproducible
  /// byte for byte.
  bool timings = false;
  std::string basename = "report";

  std::string task_name() const;
};

/// JSON with sections task, space, methods, budget, seeds, output and an
/// optional hraha section. Relative corpus paths resolve against base_dir.
/// Throws DataError describing the first problem found.
ExperimentConfig parse_config(std::string_view json, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

struct RunRecord {
  std::string task;
  Method method = Method::Proposed;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double best_fitness = 0.0;
  std::size_t evaluations = 0;
  std::vector<double> best_position;
  /// Extra per-run metrics (accuracy, f_score for classifier tasks).
  std::map<std::string, double> metrics;
  std::optional<double> wall_time_s;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

std::string to_json_line(const RunRecord& r);
RunRecord parse_run_record(std::string_view line);
/// Throws DataError naming the offending line.
std::vector<RunRecord> read_run_log(const std::filesystem::path& path);

struct RunOptions {
  /// Appended to and flushed after every run.
  std::optional<std::filesystem::path> log_path;
  std::function<void(const RunRecord&)> on_run;
};

/// Runs every (method, seed) pair, methods in report order (Proposed, AHA, RFO,
/// PSO, Random) and seeds ascending. Seeds come from
/// derive_seed(master_seed, method_stream(m), run).
std::vector<RunRecord> run_trials(const ExperimentConfig& config, const RunOptions& options = {});

/// Per-method medians of best_fitness and every metric present in all of the
/// method's records. Rows follow Proposed, AHA, RFO, PSO, Random.
TrialReport aggregate(const std::vector<RunRecord>& records);

TrialReport run_experiment(const ExperimentConfig& config, const RunOptions& options = {});
TrialReport report_from_log(const std::filesystem::path& path);

double median(std::vector<double> v);

}  // namespace opt::harness
