#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "opt/core/rng.hpp"
#include "opt/harness/classifier.hpp"
#include "opt/harness/corpus.hpp"
#include "opt/harness/csv.hpp"
#include "opt/harness/errors.hpp"
#include "opt/harness/experiment.hpp"
#include "opt/harness/hyperparams.hpp"
#include "opt/harness/naive_bayes.hpp"
#include "opt/harness/report.hpp"

using namespace opt::harness;
namespace fs = std::filesystem;

namespace {

const fs::path kData = OPT_DATA_DIR;

std::string balanced_csv(std::size_t per_label) {
  std::string s = "id,text,label\n";
  for (std::size_t i = 0; i < per_label; ++i) {
    s += "p" + std::to_string(i) + ",\"good film number " + std::to_string(i) + "\",pos\n";
    s += "n" + std::to_string(i) + ",\"bad film number " + std::to_string(i) + "\",neg\n";
  }
  return s;
}

std::string separable_csv() {
  std::string s = "id,text,label\n";
  // Repetition counts keep the cleaned texts distinct, so none are deduplicated.
  std::string aa, bb;
  for (int i = 0; i < 10; ++i) {
    aa += " aa";
    bb += " bb";
    s += "a" + std::to_string(i) + "," + aa + ",A\n";
    s += "b" + std::to_string(i) + "," + bb + ",B\n";
  }
  return s;
}

fs::path scratch_dir(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("opt_harness_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Csv, ParsesQuotedFields) {
  const auto recs = parse_csv("\xEF\xBB\xBFid,text\r\n1,\"a, \"\"quoted\"\"\nline\"\r\n\r\n2,plain\n");
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0].fields, (std::vector<std::string>{"id", "text"}));
  EXPECT_EQ(recs[1].fields[1], "a, \"quoted\"\nline");
  EXPECT_EQ(recs[2].line, 5u);
}

TEST(Csv, UnterminatedQuoteNamesLine) {
  try {
    parse_csv("a,b\n1,\"open\n");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Csv, EscapeAndWriteRoundTrip) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  std::ostringstream out;
  const std::vector<std::string> row{"x", "a,b", "q\"", "multi\nline"};
  write_csv_row(out, row);
  EXPECT_EQ(out.str().substr(out.str().size() - 2), "\r\n");
  EXPECT_EQ(parse_csv(out.str()).at(0).fields, row);
}

TEST(Corpus, StratifiedSplit) {
  const auto c = parse_corpus(balanced_csv(10), CorpusFormat::Csv, 0.8, 1);
  EXPECT_EQ(c.documents.size(), 20u);
  EXPECT_EQ(c.labels, (std::vector<std::string>{"neg", "pos"}));
  EXPECT_EQ(c.train.size(), 16u);
  EXPECT_EQ(c.test.size(), 4u);
  std::set<std::string> train_labels;
  for (auto i : c.train) train_labels.insert(c.documents[i].label);
  EXPECT_EQ(train_labels.size(), 2u);

  std::vector<std::size_t> all(c.train);
  all.insert(all.end(), c.test.begin(), c.test.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);
  EXPECT_TRUE(std::is_sorted(c.train.begin(), c.train.end()));
}

TEST(Corpus, SplitDeterministicAndSeedSensitive) {
  const auto a = parse_corpus(balanced_csv(10), CorpusFormat::Csv, 0.8, 1);
  const auto b = parse_corpus(balanced_csv(10), CorpusFormat::Csv, 0.8, 1);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  bool differs = false;
  for (std::uint64_t s = 2; s < 10 && !differs; ++s)
    differs = parse_corpus(balanced_csv(10), CorpusFormat::Csv, 0.8, s).test != a.test;
  EXPECT_TRUE(differs);
}

TEST(Corpus, MissingColumnNamed) {
  try {
    parse_corpus("id,text\n1,a\n", CorpusFormat::Csv, 0.8, 1);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("missing column 'label'"), std::string::npos) << e.what();
  }
}

TEST(Corpus, MalformedRowHasLineNumber) {
  auto csv = balanced_csv(6);
  csv += "x1,only two\n";
  try {
    parse_corpus(csv, CorpusFormat::Csv, 0.8, 1);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 14"), std::string::npos) << e.what();
  }
}

TEST(Corpus, RejectsDegenerateInputs) {
  std::string one_label = "id,text,label\n";
  for (int i = 0; i < 12; ++i) one_label += std::to_string(i) + ",word" + std::to_string(i) + ",x\n";
  EXPECT_THROW(parse_corpus(one_label, CorpusFormat::Csv, 0.8, 1), DataError);
  EXPECT_THROW(parse_corpus(balanced_csv(4), CorpusFormat::Csv, 0.8, 1), DataError);
  EXPECT_THROW(parse_corpus(balanced_csv(10), CorpusFormat::Csv, 1.0, 1), DataError);
}

TEST(Corpus, JsonlAndDeduplication) {
  std::string jl;
  for (int i = 0; i < 6; ++i) {
    jl += R"({"id":"p)" + std::to_string(i) + R"(","text":"Nice one )" + std::to_string(i) + R"(","label":"pos"})" "\n";
    jl += R"({"id":"n)" + std::to_string(i) + R"(","text":"Awful one )" + std::to_string(i) + R"(","label":"neg"})" "\n";
  }
  jl += R"({"id":"dup","text":"NICE one 0!!","label":"neg"})" "\n";
  const auto c = parse_corpus(jl, CorpusFormat::Jsonl, 0.5, 3);
  EXPECT_EQ(c.documents.size(), 12u);
  EXPECT_EQ(c.duplicates_removed, 1u);
  EXPECT_EQ(c.documents[0].id, "p0");
  EXPECT_THROW(parse_corpus(jl + "{not json\n", CorpusFormat::Jsonl, 0.5, 3), DataError);
}

TEST(Corpus, BundledSyntheticCorpus) {
  const auto c = load_corpus(kData / "synthetic_200.csv", CorpusFormat::Csv, 0.8, 1);
  EXPECT_EQ(c.documents.size() + c.duplicates_removed, 200u);
  EXPECT_EQ(c.labels.size(), 2u);
}

TEST(Hyperparams, DecodeRules) {
  const HyperparamSpace s({{"c", ContinuousDim{0.5, 2.0}},
                           {"i", IntegerDim{1, 5}},
                           {"k", CategoricalDim{{"x", "y", "z"}}}});
  const auto box = s.box();
  EXPECT_EQ(box.lower(), (std::vector<double>{0.5, 0.5, 0.0}));
  EXPECT_EQ(box.upper(), (std::vector<double>{2.0, 5.5, 3.0}));
  const auto v = s.decode(std::vector{1.25, 2.5, 3.0});
  EXPECT_EQ(std::get<double>(v[0]), 1.25);
  EXPECT_EQ(std::get<std::int64_t>(v[1]), 3);
  EXPECT_EQ(std::get<std::string>(v[2]), "z");
  EXPECT_EQ(std::get<std::int64_t>(s.decode(std::vector{1.0, 5.5, 0.0})[1]), 5);
  EXPECT_EQ(std::get<std::int64_t>(s.decode(std::vector{1.0, 0.5, 0.0})[1]), 1);
  EXPECT_EQ(std::get<std::string>(s.decode(std::vector{1.0, 1.0, 0.999})[2]), "x");
  EXPECT_EQ(s.index_of("k"), 2u);
  EXPECT_THROW(s.index_of("nope"), std::out_of_range);
}

TEST(Hyperparams, InvalidSpaces) {
  EXPECT_THROW(HyperparamSpace({{"a", ContinuousDim{1, 1}}}), std::invalid_argument);
  EXPECT_THROW(HyperparamSpace({{"a", IntegerDim{2, 1}}}), std::invalid_argument);
  EXPECT_THROW(HyperparamSpace({{"a", CategoricalDim{}}}), std::invalid_argument);
  EXPECT_THROW(HyperparamSpace({{"a", IntegerDim{0, 1}}, {"a", IntegerDim{0, 1}}}), std::invalid_argument);
  const HyperparamSpace s({{"i", IntegerDim{0, 3}}});
  EXPECT_THROW(s.encode(std::vector<ParamValue>{std::int64_t{4}}), std::invalid_argument);
  EXPECT_THROW(s.encode(std::vector<ParamValue>{1.0}), std::invalid_argument);
}

TEST(Hyperparams, RoundTripRandomTuples) {
  const HyperparamSpace s({{"lr", ContinuousDim{-3.0, 7.5}},
                           {"n", IntegerDim{-4, 9}},
                           {"big", IntegerDim{0, 500}},
                           {"flag", CategoricalDim{{"false", "true"}}},
                           {"mode", CategoricalDim{{"a", "b", "c", "d", "e"}}}});
  opt::Rng rng(42);
  for (int t = 0; t < 10000; ++t) {
    std::vector<ParamValue> v{rng.uniform(-3.0, 7.5), static_cast<std::int64_t>(rng.uniform_index(14)) - 4,
                              static_cast<std::int64_t>(rng.uniform_index(501)),
                              std::string(rng.uniform() < 0.5 ? "false" : "true"),
                              std::string(1, static_cast<char>('a' + rng.uniform_index(5)))};
    const auto x = s.encode(v);
    ASSERT_TRUE(s.box().contains(x));
    ASSERT_EQ(s.decode(x), v);
  }
}

TEST(NaiveBayes, SeparatesObviousClasses) {
  opt::text::TermDocMatrix x{4, 2, {3, 0, 2, 0, 0, 4, 0, 1}, opt::text::MatrixMode::Counts};
  MultinomialNB nb;
  nb.fit(x, {"a", "a", "b", "b"}, 1.0);
  EXPECT_EQ(nb.predict(x), (std::vector<std::string>{"a", "a", "b", "b"}));
  EXPECT_NEAR(std::exp(nb.log_prior()[0]), 0.5, 1e-15);
  // P(term0 | a) = (5 + 1) / (5 + 2).
  EXPECT_NEAR(std::exp(nb.log_likelihood()[0]), 6.0 / 7.0, 1e-15);
  EXPECT_THROW(nb.fit(x, {"a", "a", "b", "b"}, 0.0), std::invalid_argument);
}

TEST(Classifier, SeparableCorpusScoresZero) {
  const auto corpus = parse_corpus(separable_csv(), CorpusFormat::Csv, 0.8, 1);
  const auto space = default_classifier_space();
  const auto obj = classifier_objective(corpus, space);
  for (double md : {1.0, 2.0})
    for (double smooth : {0.1, 1.0}) {
      const std::vector<ParamValue> v{std::int64_t(md), std::int64_t{100}, std::string("false"), smooth};
      EXPECT_EQ(obj(space.encode(v)), 0.0);
    }
}

TEST(Classifier, EmptyVocabularyIsWorst) {
  const auto corpus = parse_corpus(separable_csv(), CorpusFormat::Csv, 0.8, 1);
  const auto space = default_classifier_space();
  const auto obj = classifier_objective(corpus, space);
  EXPECT_EQ(obj(space.encode(std::vector<ParamValue>{std::int64_t{1}, std::int64_t{0}, std::string("true"), 1.0})),
            1.0);
  // Both terms occur in 8 training documents, so min_doc_freq 5 keeps them.
  EXPECT_EQ(obj(space.encode(std::vector<ParamValue>{std::int64_t{5}, std::int64_t{50}, std::string("false"), 1.0})),
            0.0);
}

TEST(Classifier, NeverThrowsInsideBoxAndDeterministic) {
  const auto corpus = load_corpus(kData / "synthetic_200.csv", CorpusFormat::Csv, 0.8, 1);
  const auto space = default_classifier_space();
  const auto obj = classifier_objective(corpus, space);
  const auto box = space.box();
  opt::Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    std::vector<double> x(box.dims());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = rng.uniform(box.lower(j), box.upper(j));
    if (t == 0) x = box.lower();
    if (t == 1) x = box.upper();
    double f1 = 0;
    ASSERT_NO_THROW(f1 = obj(x));
    EXPECT_GE(f1, 0.0);
    EXPECT_LE(f1, 1.0);
    EXPECT_EQ(f1, obj(x));
  }
}

TEST(Report, RenderFormats) {
  TrialReport r{"sphere-2d", {"best_fitness"}, {{"Proposed", {{"best_fitness", 0.1}}, {1, 2}},
                                                {"PSO", {{"best_fitness", 2.5e-7}}, {3, 4}}}};
  EXPECT_EQ(render_report(r, ReportFormat::Csv), "method,best_fitness\r\nProposed,0.1\r\nPSO,2.5e-07\r\n");
  const auto text = render_report(r, ReportFormat::Text);
  EXPECT_NE(text.find("0.1000"), std::string::npos);
  EXPECT_NE(text.find("0.0000"), std::string::npos);
  EXPECT_EQ(parse_report_json(render_report(r, ReportFormat::Json)), r);
  EXPECT_THROW(render_report(TrialReport{"t", {"x"}, {}}, ReportFormat::Csv), std::invalid_argument);
}

TEST(Report, NumbersRoundTrip) {
  opt::Rng rng(8);
  for (int t = 0; t < 1000; ++t) {
    const double v = rng.normal() * std::pow(10.0, rng.uniform(-12, 12));
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
}

TEST(Report, UnwritablePath) {
  TrialReport r{"t", {"best_fitness"}, {{"Proposed", {{"best_fitness", 1}}, {1}}}};
  EXPECT_THROW(emit_report(r, ReportFormat::Csv, "/nonexistent_dir_opt/x/report.csv"), std::runtime_error);
}

TEST(Experiment, ParseConfigDefaultsAndErrors) {
  const auto cfg = parse_config(
      R"({"task":{"type":"benchmark","function":"sphere","dims":10},"methods":["hraha","AHA","rfo","pso"],
          "budget":{"pop_size":10,"iterations":5},"seeds":3})");
  EXPECT_EQ(cfg.methods.size(), 4u);
  EXPECT_EQ(cfg.seeds, 3u);
  EXPECT_EQ(cfg.master_seed, 1u);
  EXPECT_EQ(cfg.task_name(), "sphere-10d");
  EXPECT_EQ(cfg.hraha.max_iters, 5u);
  EXPECT_THROW(parse_config(R"({"task":{"type":"benchmark","function":"sphere","dims":2},"methods":["ga"],
                               "budget":{"pop_size":10,"iterations":5},"seeds":1})"),
               DataError);
  EXPECT_THROW(parse_config("{"), DataError);
  EXPECT_THROW(parse_config(R"({"task":{"type":"benchmark","function":"sphere","dims":2},"methods":["pso"],
                               "budget":{"pop_size":10,"iterations":5},"seeds":1,"hraha":{"scaling_a":0.5}})"),
               DataError);
}

TEST(Experiment, SeedsFollowDerivationRule) {
  const auto cfg = parse_config(
      R"({"task":{"type":"benchmark","function":"sphere","dims":2},"methods":["pso","hraha"],
          "budget":{"pop_size":6,"iterations":3},"seeds":{"count":2,"master":9}})");
  const auto recs = run_trials(cfg);
  ASSERT_EQ(recs.size(), 4u);
  // Runs follow the report's method order, not the order listed in the config.
  EXPECT_EQ(recs[0].method, Method::Proposed);
  EXPECT_EQ(recs[0].seed, opt::derive_seed(9, method_stream(Method::Proposed), 0));
  EXPECT_EQ(recs[3].method, Method::PSO);
  EXPECT_EQ(recs[3].seed, opt::derive_seed(9, method_stream(Method::PSO), 1));
}

TEST(Experiment, ShapeOfFourMethodRun) {
  const auto cfg = parse_config(
      R"({"task":{"type":"benchmark","function":"sphere","dims":10},"methods":["pso","rfo","aha","hraha"],
          "budget":{"pop_size":10,"iterations":10},"seeds":10})");
  std::size_t calls = 0;
  RunOptions opts;
  opts.on_run = [&](const RunRecord&) { ++calls; };
  const auto rep = run_experiment(cfg, opts);
  EXPECT_EQ(calls, 40u);
  ASSERT_EQ(rep.rows.size(), 4u);
  EXPECT_EQ(rep.rows[0].method, "Proposed");
  EXPECT_EQ(rep.rows[3].method, "PSO");
  EXPECT_EQ(rep.columns, (std::vector<std::string>{"best_fitness"}));
  EXPECT_EQ(rep.rows[0].seeds.size(), 10u);
}

TEST(Experiment, SingleRunAndLogReplay) {
  const auto dir = scratch_dir("log");
  const auto cfg = parse_config(
      R"({"task":{"type":"benchmark","function":"ackley","dims":3},"methods":["rfo","hraha"],
          "budget":{"pop_size":8,"iterations":6},"seeds":3})");
  RunOptions opts;
  opts.log_path = dir / "runs.jsonl";
  const auto rep = run_experiment(cfg, opts);
  EXPECT_EQ(report_from_log(dir / "runs.jsonl"), rep);
  const auto recs = read_run_log(dir / "runs.jsonl");
  ASSERT_EQ(recs.size(), 6u);
  EXPECT_EQ(parse_run_record(to_json_line(recs[2])), recs[2]);

  const auto single = parse_config(
      R"({"task":{"type":"benchmark","function":"ackley","dims":3},"methods":["aha"],
          "budget":{"pop_size":8,"iterations":6},"seeds":1})");
  EXPECT_EQ(run_experiment(single).rows.size(), 1u);
  fs::remove_all(dir);
}

TEST(Experiment, ClassifierRunReportsMetrics) {
  const auto cfg = parse_config(R"({"task":{"type":"classifier","corpus":"synthetic_200.csv"},"methods":["random"],
                                    "budget":{"pop_size":4,"iterations":1},"seeds":2})",
                                kData);
  const auto rep = run_experiment(cfg);
  EXPECT_EQ(rep.columns, (std::vector<std::string>{"accuracy", "best_fitness", "f_score"}));
  EXPECT_NEAR(rep.rows[0].values.at("f_score"), 1.0 - rep.rows[0].values.at("best_fitness"), 1e-12);
}

TEST(Experiment, TimingsAddColumn) {
  auto cfg = parse_config(R"({"task":{"type":"benchmark","function":"sphere","dims":2},"methods":["pso"],
                              "budget":{"pop_size":5,"iterations":2},"seeds":1,"output":{"timings":true}})");
  EXPECT_EQ(run_experiment(cfg).columns, (std::vector<std::string>{"best_fitness", "wall_time_s"}));
}

TEST(Experiment, Median) {
  EXPECT_EQ(median({3, 1, 2}), 2.0);
  EXPECT_EQ(median({4, 1, 3, 2}), 2.5);
  EXPECT_THROW(median({}), std::invalid_argument);
}

TEST(Experiment, MethodNames) {
  EXPECT_EQ(parse_method("HRAHA"), Method::Proposed);
  EXPECT_EQ(parse_method("Proposed"), Method::Proposed);
  EXPECT_EQ(method_label(Method::Random), "Random");
  EXPECT_FALSE(parse_method("de").has_value());
}
