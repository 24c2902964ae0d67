#include "opt/harness/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "opt/core/rng.hpp"
#include "opt/harness/csv.hpp"
#include "opt/harness/errors.hpp"
#include "opt/text/clean.hpp"

namespace opt::harness {

namespace {

std::vector<LabeledDocument> parse_csv_docs(std::string_view content) {
  const auto records = parse_csv(content);
  if (records.empty()) throw DataError("corpus: empty CSV");
  const auto& header = records.front().fields;
  auto column = [&](const char* name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw DataError(std::string("corpus: missing column '") + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t id = column("id"), text = column("text"), label = column("label");
  std::vector<LabeledDocument> docs;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    if (f.size() != header.size()) {
      throw DataError("corpus: malformed row at line " + std::to_string(records[r].line) + ": expected " +
                      std::to_string(header.size()) + " fields, got " + std::to_string(f.size()));
    }
    docs.push_back({f[id], f[text], f[label]});
  }
  return docs;
}

std::vector<LabeledDocument> parse_jsonl_docs(std::string_view content) {
  std::vector<LabeledDocument> docs;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw DataError("corpus: malformed JSON at line " + std::to_string(lineno));
    }
    if (!j.is_object()) throw DataError("corpus: line " + std::to_string(lineno) + " is not an object");
    auto field = [&](const char* name) {
      auto it = j.find(name);
      if (it == j.end()) {
        throw DataError(std::string("corpus: missing column '") + name + "' at line " + std::to_string(lineno));
      }
      if (it->is_string()) return it->get<std::string>();
      if (it->is_number()) return it->dump();
      throw DataError(std::string("corpus: field '") + name + "' at line " + std::to_string(lineno) +
                      " must be a string");
    };
    docs.push_back({field("id"), field("text"), field("label")});
  }
  return docs;
}

}  // namespace

CorpusFormat corpus_format_from_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return ext == ".jsonl" || ext == ".ndjson" ? CorpusFormat::Jsonl : CorpusFormat::Csv;
}

LabeledCorpus parse_corpus(std::string_view content, CorpusFormat format, double split_ratio, std::uint64_t seed) {
  if (!(split_ratio > 0.0 && split_ratio < 1.0)) throw DataError("corpus: split ratio must lie in (0, 1)");
  std::vector<LabeledDocument> raw;
  try {
    raw = format == CorpusFormat::Csv ? parse_csv_docs(content) : parse_jsonl_docs(content);
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("corpus: ") + e.what());
  }

  LabeledCorpus c;
  std::set<std::string> seen;
  for (auto& d : raw) {
    std::string cleaned;
    try {
      cleaned = text::clean_text(d.text);
    } catch (const std::invalid_argument& e) {
      throw DataError("corpus: document '" + d.id + "': " + e.what());
    }
    if (!seen.insert(cleaned).second) {
      ++c.duplicates_removed;
      continue;
    }
    c.documents.push_back(std::move(d));
  }
  if (c.documents.size() < 10) {
    throw DataError("corpus: need at least 10 documents, got " + std::to_string(c.documents.size()));
  }

  std::map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < c.documents.size(); ++i) by_label[c.documents[i].label].push_back(i);
  if (by_label.size() < 2) throw DataError("corpus: need at least 2 labels");

  Rng rng(seed);
  for (auto& [label, idx] : by_label) {
    c.labels.push_back(label);
    for (std::size_t k = idx.size(); k > 1; --k) std::swap(idx[k - 1], idx[rng.uniform_index(k)]);
    const auto n = idx.size();
    auto n_train = static_cast<std::size_t>(std::llround(split_ratio * static_cast<double>(n)));
    n_train = std::clamp<std::size_t>(n_train, 1, n);
    c.train.insert(c.train.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
    c.test.insert(c.test.end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
  }
  std::sort(c.train.begin(), c.train.end());
  std::sort(c.test.begin(), c.test.end());
  return c;
}

LabeledCorpus load_corpus(const std::filesystem::path& path, CorpusFormat format, double split_ratio,
                          std::uint64_t seed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("corpus: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), format, split_ratio, seed);
}

}  // namespace opt::harness
