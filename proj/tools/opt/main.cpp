// opt: experiment driver.
//
//   opt run     --config exp.json [--seed N] [--out DIR]
//   opt bench   --function sphere --dims 10 --method hraha [--pop 30] [--iters 500] [--seed 1]
//   opt tfidf   --input corpus.csv --out matrix.csv [--min-df 1] [--max-terms N] [--stem]
//   opt metrics --cand cand.txt --ref ref.txt
//   opt report  --log runs.jsonl [--format text] [--out FILE]
//
// Exit codes: 0 ok, 1 usage, 2 data error, 3 runtime failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opt/baselines/baselines.hpp"
#include "opt/baselines/benchmarks.hpp"
#include "opt/harness/corpus.hpp"
#include "opt/harness/csv.hpp"
#include "opt/harness/errors.hpp"
#include "opt/harness/experiment.hpp"
#include "opt/harness/report.hpp"
#include "opt/hraha/hraha.hpp"
#include "opt/metrics/metrics.hpp"
#include "opt/text/clean.hpp"
#include "opt/text/vectorize.hpp"

namespace fs = std::filesystem;
using namespace opt;
using harness::DataError;

namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kRuntime = 3 };

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw DataError("cannot open " + p.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

int cmd_run(const fs::path& config_path, std::optional<std::uint64_t> seed, const fs::path& out_dir) {
  auto cfg = harness::load_config(config_path);
  if (seed) cfg.master_seed = *seed;
  fs::create_directories(out_dir);
  harness::RunOptions opts;
  opts.log_path = out_dir / "runs.jsonl";
  opts.on_run = [](const harness::RunRecord& r) {
    std::cerr << harness::method_label(r.method) << " run " << r.run << ": best " << harness::format_number(r.best_fitness)
              << '\n';
  };
  const auto report = harness::run_experiment(cfg, opts);
  for (auto fmt : cfg.formats) {
    const auto path = out_dir / (cfg.basename + std::string(harness::extension(fmt)));
    harness::emit_report(report, fmt, path);
    std::cerr << "wrote " << path.string() << '\n';
  }
  std::cout << harness::render_report(report, harness::ReportFormat::Text);
  return kOk;
}

int cmd_bench(const std::string& function, std::size_t dims, const std::string& method, std::size_t pop,
              std::size_t iters, std::uint64_t seed) {
  const auto m = harness::parse_method(method);
  if (!m) throw CLI::ValidationError("--method", "unknown method '" + method + "'");
  const auto& names = baselines::benchmark_names();
  if (std::find(names.begin(), names.end(), function) == names.end()) {
    throw CLI::ValidationError("--function", "unknown function '" + function + "'");
  }
  const auto fn = baselines::benchmark_fn(function, dims);
  const auto obj = fn.objective();
  const auto space = fn.space();
  Rng rng(seed);
  hraha::OptimizationResult res;
  switch (*m) {
    case harness::Method::Proposed: {
      hraha::HrahaConfig cfg;
      cfg.max_iters = iters;
      res = hraha::run(obj, space, cfg, pop, rng);
      break;
    }
    case harness::Method::AHA: res = baselines::run_aha(obj, space, pop, iters, rng); break;
    case harness::Method::RFO: res = baselines::run_rfo(obj, space, pop, iters, rng); break;
    case harness::Method::PSO: res = baselines::run_pso(obj, space, pop, iters, rng); break;
    case harness::Method::Random: res = baselines::random_search(obj, space, pop, iters, rng); break;
  }
  std::cout << "method,function,dims,best_fitness,evaluations\n"
            << harness::method_label(*m) << ',' << function << ',' << dims << ','
            << harness::format_number(res.best_fitness) << ',' << res.evaluations << '\n';
  return kOk;
}

int cmd_tfidf(const fs::path& input, const fs::path& out, std::size_t min_df, std::optional<std::size_t> max_terms,
              bool stem) {
  std::ifstream in(input, std::ios::binary);
  if (!in) throw DataError("cannot open " + input.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto records = harness::parse_csv(buf.str());
  if (records.empty()) throw DataError("empty corpus");
  const auto& header = records.front().fields;
  const auto col = [&](const char* name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw DataError(std::string("missing column '") + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t id_col = col("id"), text_col = col("text");
  text::PipelineOptions opts;
  opts.stem = stem;
  std::vector<std::string> ids;
  text::Corpus corpus;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    if (f.size() != header.size()) {
      throw DataError("malformed row at line " + std::to_string(records[r].line));
    }
    ids.push_back(f[id_col]);
    try {
      corpus.push_back(text::preprocess(f[text_col], opts));
    } catch (const std::invalid_argument& e) {
      throw DataError("line " + std::to_string(records[r].line) + ": " + e.what());
    }
  }
  if (corpus.empty()) throw DataError("corpus has no documents");
  if (max_terms && *max_terms == 0) throw harness::DataError("empty vocabulary requested");
  const auto vocab = text::build_vocabulary(corpus, min_df, max_terms);
  const auto m = text::tf_idf(corpus, vocab);

  std::ofstream os(out, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write " + out.string());
  std::vector<std::string> row{"id"};
  row.insert(row.end(), vocab.terms().begin(), vocab.terms().end());
  harness::write_csv_row(os, row);
  for (std::size_t d = 0; d < m.rows; ++d) {
    row.assign(1, ids[d]);
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(harness::format_number(m(d, j)));
    harness::write_csv_row(os, row);
  }
  std::cerr << m.rows << " documents x " << m.cols << " terms -> " << out.string() << '\n';
  return kOk;
}

int cmd_metrics(const fs::path& cand_path, const fs::path& ref_path) {
  const auto cands = read_lines(cand_path);
  const auto refs = read_lines(ref_path);
  if (cands.size() != refs.size()) {
    throw DataError("candidate and reference files differ in line count (" + std::to_string(cands.size()) + " vs " +
                    std::to_string(refs.size()) + ")");
  }
  if (cands.empty()) throw DataError("no sentence pairs");
  double bleu = 0.0, rouge = 0.0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto c = text::tokenize(cands[i]);
    const auto r = text::tokenize(refs[i]);
    if (r.empty()) throw DataError("empty reference at line " + std::to_string(i + 1));
    bleu += metrics::bleu4(c, r);
    rouge += metrics::rouge_l(c, r);
  }
  const auto n = static_cast<double>(cands.size());
  std::cout << "pairs,bleu4,rouge_l\n"
            << cands.size() << ',' << harness::format_number(bleu / n) << ',' << harness::format_number(rouge / n)
            << '\n';
  return kOk;
}

int cmd_report(const fs::path& log, const std::string& format, const std::optional<fs::path>& out) {
  const auto fmt = harness::parse_report_format(format);
  if (!fmt) throw CLI::ValidationError("--format", "unknown format '" + format + "'");
  const auto report = harness::report_from_log(log);
  if (out) {
    harness::emit_report(report, *fmt, *out);
  } else {
    std::cout << harness::render_report(report, *fmt);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded optimizer races, text features and metrics"};
  app.require_subcommand(1);

  fs::path config, out_dir = "results";
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "Run an experiment config and write reports");
  run->add_option("--config", config, "Experiment JSON")->required()->check(CLI::ExistingFile);
  run->add_option("--seed", seed, "Master seed (overrides the config)");
  run->add_option("--out", out_dir, "Output directory");

  std::string function = "sphere", method = "hraha";
  std::size_t dims = 10, pop = 30, iters = 500;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Run one optimizer on a benchmark function");
  bench->add_option("--function", function, "sphere, rastrigin, rosenbrock or ackley");
  bench->add_option("--dims", dims)->check(CLI::PositiveNumber);
  bench->add_option("--method", method, "hraha, aha, rfo, pso or random");
  bench->add_option("--pop", pop)->check(CLI::Range(4, 100000));
  bench->add_option("--iters", iters);
  bench->add_option("--seed", bench_seed);

  fs::path input, matrix_out;
  std::size_t min_df = 1;
  std::optional<std::size_t> max_terms;
  bool stem = false;
  auto* tfidf = app.add_subcommand("tfidf", "Write the TF-IDF matrix of a CSV corpus");
  tfidf->add_option("--input", input, "CSV with id and text columns")->required()->check(CLI::ExistingFile);
  tfidf->add_option("--out", matrix_out, "Output CSV")->required();
  tfidf->add_option("--min-df", min_df)->check(CLI::PositiveNumber);
  tfidf->add_option("--max-terms", max_terms);
  tfidf->add_flag("--stem", stem, "Apply the Porter stemmer");

  fs::path cand, ref;
  auto* met = app.add_subcommand("metrics", "Mean BLEU-4 and ROUGE-L over line-aligned files");
  met->add_option("--cand", cand)->required()->check(CLI::ExistingFile);
  met->add_option("--ref", ref)->required()->check(CLI::ExistingFile);

  fs::path log;
  std::string report_format = "text";
  std::optional<fs::path> report_out;
  auto* rep = app.add_subcommand("report", "Rebuild a report from a run log");
  rep->add_option("--log", log, "runs.jsonl")->required()->check(CLI::ExistingFile);
  rep->add_option("--format", report_format, "csv, json or text");
  rep->add_option("--out", report_out);

  try {
    app.parse(argc, argv);
    if (*run) return cmd_run(config, seed, out_dir);
    if (*bench) return cmd_bench(function, dims, method, pop, iters, bench_seed);
    if (*tfidf) return cmd_tfidf(input, matrix_out, min_df, max_terms, stem);
    if (*met) return cmd_metrics(cand, ref);
    if (*rep) return cmd_report(log, report_format, report_out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}
