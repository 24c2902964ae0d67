#include "opt/harness/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "opt/baselines/baselines.hpp"
#include "opt/baselines/benchmarks.hpp"
#include "opt/core/rng.hpp"
#include "opt/harness/classifier.hpp"
#include "opt/harness/errors.hpp"
#include "opt/hraha/hraha.hpp"

namespace opt::harness {

using nlohmann::json;

namespace {

constexpr Method kAllMethods[] = {Method::Proposed, Method::AHA, Method::RFO, Method::PSO, Method::Random};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  return it == j.end() ? fallback : it->get<T>();
}

HyperparamSpace parse_space(const json& j) {
  std::vector<HyperparamDim> dims;
  for (const auto& d : j) {
    const auto name = d.at("name").get<std::string>();
    const auto type = d.at("type").get<std::string>();
    if (type == "continuous") {
      dims.push_back({name, ContinuousDim{d.at("low").get<double>(), d.at("high").get<double>()}});
    } else if (type == "integer") {
      dims.push_back({name, IntegerDim{d.at("low").get<std::int64_t>(), d.at("high").get<std::int64_t>()}});
    } else if (type == "categorical") {
      dims.push_back({name, CategoricalDim{d.at("choices").get<std::vector<std::string>>()}});
    } else {
      throw DataError("config: unknown dimension type '" + type + "' for " + name);
    }
  }
  return HyperparamSpace(std::move(dims));
}

void parse_hraha(const json& j, hraha::HrahaConfig& cfg) {
  cfg.omega = get_or(j, "omega", cfg.omega);
  cfg.scaling_a = get_or(j, "scaling_a", cfg.scaling_a);
  cfg.worst_fraction = get_or(j, "worst_fraction", cfg.worst_fraction);
  cfg.nomad_probability = get_or(j, "nomad_probability", cfg.nomad_probability);
  cfg.territorial_lambda = get_or(j, "territorial_lambda", cfg.territorial_lambda);
  cfg.elitism = get_or(j, "elitism", cfg.elitism);
  if (j.contains("migration_coefficient")) cfg.migration_coefficient = j["migration_coefficient"].get<std::size_t>();
  if (j.contains("alpha_thresholds")) {
    const auto t = j["alpha_thresholds"].get<std::vector<double>>();
    if (t.size() != 3) throw DataError("config: hraha.alpha_thresholds needs 3 values");
    cfg.alpha_thresholds = {t[0], t[1], t[2]};
  }
}

struct PreparedTask {
  Objective objective;
  std::optional<SearchSpace> space;
  std::shared_ptr<const ClassifierTask> classifier;
};

PreparedTask prepare(const ExperimentConfig& cfg) {
  PreparedTask p;
  if (const auto* b = std::get_if<BenchmarkTaskConfig>(&cfg.task)) {
    const auto fn = baselines::benchmark_fn(b->function, b->dims);
    p.objective = fn.objective();
    p.space = fn.space();
  } else {
    const auto& c = std::get<ClassifierTaskConfig>(cfg.task);
    const auto corpus = load_corpus(c.corpus, c.format, c.split_ratio, c.split_seed);
    p.classifier = std::make_shared<const ClassifierTask>(corpus);
    p.objective = classifier_objective(p.classifier, cfg.space);
    p.space = cfg.space.box();
  }
  return p;
}

hraha::OptimizationResult run_method(Method m, const ExperimentConfig& cfg, const PreparedTask& task, Rng& rng) {
  const auto& space = *task.space;
  switch (m) {
    case Method::Proposed: {
      auto h = cfg.hraha;
      h.max_iters = cfg.iterations;
      return hraha::run(task.objective, space, h, cfg.pop_size, rng);
    }
    case Method::AHA:
      return baselines::run_baseline(baselines::BaselineKind::AHA, task.objective, space, cfg.pop_size,
                                     cfg.iterations, rng);
    case Method::RFO:
      return baselines::run_baseline(baselines::BaselineKind::RFO, task.objective, space, cfg.pop_size,
                                     cfg.iterations, rng);
    case Method::PSO:
      return baselines::run_baseline(baselines::BaselineKind::PSO, task.objective, space, cfg.pop_size,
                                     cfg.iterations, rng);
    case Method::Random:
      return baselines::random_search(task.objective, space, cfg.pop_size, cfg.iterations, rng);
  }
  throw std::logic_error("unknown method");
}

}  // namespace

std::string_view method_label(Method m) {
  switch (m) {
    case Method::Proposed: return "Proposed";
    case Method::AHA: return "AHA";
    case Method::RFO: return "RFO";
    case Method::PSO: return "PSO";
    case Method::Random: return "Random";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  const auto n = lower(name);
  if (n == "hraha" || n == "proposed") return Method::Proposed;
  if (n == "aha") return Method::AHA;
  if (n == "rfo") return Method::RFO;
  if (n == "pso") return Method::PSO;
  if (n == "random") return Method::Random;
  return std::nullopt;
}

std::uint64_t method_stream(Method m) { return static_cast<std::uint64_t>(m); }

std::string ExperimentConfig::task_name() const {
  if (const auto* b = std::get_if<BenchmarkTaskConfig>(&task)) {
    return b->function + "-" + std::to_string(b->dims) + "d";
  }
  return "classifier:" + std::get<ClassifierTaskConfig>(task).corpus.filename().string();
}

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  ExperimentConfig cfg;
  try {
    const auto j = json::parse(text);
    const auto& task = j.at("task");
    const auto type = task.at("type").get<std::string>();
    if (type == "benchmark") {
      cfg.task = BenchmarkTaskConfig{task.at("function").get<std::string>(), task.at("dims").get<std::size_t>()};
      const auto& names = baselines::benchmark_names();
      const auto& fn = std::get<BenchmarkTaskConfig>(cfg.task).function;
      if (std::find(names.begin(), names.end(), fn) == names.end()) {
        throw DataError("config: unknown benchmark function '" + fn + "'");
      }
    } else if (type == "classifier") {
      ClassifierTaskConfig c;
      c.corpus = task.at("corpus").get<std::string>();
      if (c.corpus.is_relative() && !base_dir.empty()) c.corpus = base_dir / c.corpus;
      c.format = corpus_format_from_path(c.corpus);
      if (task.contains("format")) {
        const auto f = task["format"].get<std::string>();
        if (f == "csv") {
          c.format = CorpusFormat::Csv;
        } else if (f == "jsonl") {
          c.format = CorpusFormat::Jsonl;
        } else {
          throw DataError("config: unknown corpus format '" + f + "'");
        }
      }
      c.split_ratio = get_or(task, "split_ratio", c.split_ratio);
      c.split_seed = get_or(task, "split_seed", c.split_seed);
      cfg.task = c;
      cfg.space = j.contains("space") ? parse_space(j["space"]) : default_classifier_space();
    } else {
      throw DataError("config: unknown task type '" + type + "'");
    }

    std::set<Method> seen;
    for (const auto& m : j.at("methods")) {
      const auto name = m.get<std::string>();
      const auto method = parse_method(name);
      if (!method) throw DataError("config: unknown method '" + name + "'");
      if (seen.insert(*method).second) cfg.methods.push_back(*method);
    }
    if (cfg.methods.empty()) throw DataError("config: no methods");

    const auto& budget = j.at("budget");
    cfg.pop_size = budget.at("pop_size").get<std::size_t>();
    cfg.iterations = budget.at("iterations").get<std::size_t>();
    if (cfg.pop_size < 4) throw DataError("config: budget.pop_size must be at least 4");

    const auto& seeds = j.at("seeds");
    if (seeds.is_number()) {
      cfg.seeds = seeds.get<std::size_t>();
    } else {
      cfg.seeds = seeds.at("count").get<std::size_t>();
      cfg.master_seed = get_or(seeds, "master", cfg.master_seed);
    }
    if (cfg.seeds == 0) throw DataError("config: seeds.count must be positive");

    if (j.contains("output")) {
      const auto& out = j["output"];
      if (out.contains("formats")) {
        cfg.formats.clear();
        for (const auto& f : out["formats"]) {
          const auto fmt = parse_report_format(f.get<std::string>());
          if (!fmt) throw DataError("config: unknown report format '" + f.get<std::string>() + "'");
          cfg.formats.push_back(*fmt);
        }
      }
      cfg.timings = get_or(out, "timings", cfg.timings);
      cfg.basename = get_or(out, "basename", cfg.basename);
    }
    if (j.contains("hraha")) parse_hraha(j["hraha"], cfg.hraha);
    cfg.hraha.max_iters = cfg.iterations;
    cfg.hraha.validate();
  } catch (const json::exception& e) {
    throw DataError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("config: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("config: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path());
}

std::string to_json_line(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["task"] = r.task;
  j["method"] = method_label(r.method);
  j["run"] = r.run;
  j["seed"] = r.seed;
  j["best_fitness"] = r.best_fitness;
  j["evaluations"] = r.evaluations;
  j["best_position"] = r.best_position;
  j["metrics"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.metrics) j["metrics"][k] = v;
  if (r.wall_time_s) j["wall_time_s"] = *r.wall_time_s;
  return j.dump();
}

RunRecord parse_run_record(std::string_view line) {
  const auto j = json::parse(line);
  RunRecord r;
  r.task = j.at("task").get<std::string>();
  const auto m = parse_method(j.at("method").get<std::string>());
  if (!m) throw DataError("run log: unknown method");
  r.method = *m;
  r.run = j.at("run").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.best_fitness = j.at("best_fitness").get<double>();
  r.evaluations = j.at("evaluations").get<std::size_t>();
  r.best_position = j.at("best_position").get<std::vector<double>>();
  r.metrics = j.at("metrics").get<std::map<std::string, double>>();
  if (j.contains("wall_time_s")) r.wall_time_s = j["wall_time_s"].get<double>();
  return r;
}

std::vector<RunRecord> read_run_log(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("run log: cannot open " + path.string());
  std::vector<RunRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_run_record(line));
    } catch (const json::exception& e) {
      throw DataError("run log: line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<RunRecord> run_trials(const ExperimentConfig& cfg, const RunOptions& options) {
  const PreparedTask task = prepare(cfg);
  std::ofstream log;
  if (options.log_path) {
    log.open(*options.log_path, std::ios::binary | std::ios::trunc);
    if (!log) throw std::runtime_error("cannot write run log: " + options.log_path->string());
  }
  const std::string name = cfg.task_name();
  std::vector<RunRecord> records;
  for (Method m : kAllMethods) {
    if (std::find(cfg.methods.begin(), cfg.methods.end(), m) == cfg.methods.end()) continue;
    for (std::size_t run = 0; run < cfg.seeds; ++run) {
      RunRecord rec;
      rec.task = name;
      rec.method = m;
      rec.run = run;
      rec.seed = derive_seed(cfg.master_seed, method_stream(m), run);
      Rng rng(rec.seed);
      const auto t0 = std::chrono::steady_clock::now();
      const auto result = run_method(m, cfg, task, rng);
      const auto t1 = std::chrono::steady_clock::now();
      rec.best_fitness = result.best_fitness;
      rec.evaluations = result.evaluations;
      rec.best_position = result.best_position;
      if (task.classifier) {
        const auto score = task.classifier->evaluate(params_from(cfg.space, cfg.space.decode(result.best_position)));
        rec.metrics["accuracy"] = score.accuracy;
        rec.metrics["f_score"] = score.macro_f;
      }
      if (cfg.timings) rec.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
      if (log.is_open()) {
        log << to_json_line(rec) << '\n';
        log.flush();
      }
      if (options.on_run) options.on_run(rec);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of empty set");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

TrialReport aggregate(const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::invalid_argument("aggregate: no runs");
  TrialReport report;
  report.task = records.front().task;
  std::set<std::string> columns;
  bool first = true;
  for (Method m : kAllMethods) {
    std::vector<const RunRecord*> mine;
    for (const auto& r : records)
      if (r.method == m) mine.push_back(&r);
    if (mine.empty()) continue;
    std::sort(mine.begin(), mine.end(), [](const RunRecord* a, const RunRecord* b) { return a->run < b->run; });

    std::map<std::string, std::vector<double>> samples;
    ReportRow row;
    row.method = std::string(method_label(m));
    for (const auto* r : mine) {
      row.seeds.push_back(r->seed);
      samples["best_fitness"].push_back(r->best_fitness);
      for (const auto& [k, v] : r->metrics) samples[k].push_back(v);
      if (r->wall_time_s) samples["wall_time_s"].push_back(*r->wall_time_s);
    }
    std::set<std::string> cols;
    for (const auto& [k, v] : samples) {
      if (v.size() != mine.size()) continue;
      row.values[k] = median(v);
      cols.insert(k);
    }
    if (first) {
      columns = cols;
      first = false;
    } else if (cols != columns) {
      throw DataError("aggregate: methods report different metric columns");
    }
    report.rows.push_back(std::move(row));
  }
  report.columns.assign(columns.begin(), columns.end());
  return report;
}

TrialReport run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  return aggregate(run_trials(config, options));
}

TrialReport report_from_log(const std::filesystem::path& path) { return aggregate(read_run_log(path)); }

}  // namespace opt::harness
