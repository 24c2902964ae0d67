#include "opt/text/stopwords.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace opt::text {

namespace {

constexpr const char* kEnglish[] = {
    "a",       "about",   "above",  "after",   "again",   "against", "all",     "am",      "an",
    "and",     "any",     "are",    "as",      "at",      "be",      "because", "been",    "before",
    "being",   "below",   "between", "both",   "but",     "by",      "can",     "cannot",  "could",
    "did",     "do",      "does",   "doing",   "down",    "during",  "each",    "few",     "for",
    "from",    "further", "had",    "has",     "have",    "having",  "he",      "her",     "here",
    "hers",    "herself", "him",    "himself", "his",     "how",     "i",       "if",      "in",
    "into",    "is",      "it",     "its",     "itself",  "just",    "me",      "more",    "most",
    "my",      "myself",  "never",  "no",      "nor",     "not",     "now",     "of",      "off",
    "on",      "once",    "only",   "or",      "other",   "our",     "ours",    "ourselves", "out",
    "over",    "own",     "same",   "shall",   "she",     "should",  "so",      "some",    "such",
    "than",    "that",    "the",    "their",   "theirs",  "them",    "themselves", "then", "there",
    "these",   "they",    "this",   "those",   "through", "to",      "too",     "under",   "until",
    "up",      "us",      "very",   "was",     "we",      "were",    "what",    "when",    "where",
    "which",   "while",   "who",    "whom",    "why",     "will",    "with",    "would",   "you",
    "your",    "yours",   "yourself", "yourselves",
};

constexpr const char* kSentimentKeep[] = {"not", "no", "nor", "never", "but"};

}  // namespace

const Stoplist& Stoplist::english() {
  static const Stoplist list = [] {
    Stoplist s;
    s.version = "en-v1";
    for (const char* w : kEnglish) s.words.insert(w);
    return s;
  }();
  return list;
}

const Stoplist& Stoplist::english_sentiment() {
  static const Stoplist list = [] {
    Stoplist s = english();
    s.version = "en-v1-sentiment";
    for (const char* w : kSentimentKeep) s.words.erase(std::string(w));
    return s;
  }();
  return list;
}

Stoplist Stoplist::none() { return Stoplist{"none", {}}; }

Stoplist Stoplist::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stoplist: " + path.string());
  Stoplist s;
  s.version = path.stem().string();
  std::string line;
  while (std::getline(in, line)) {
    const auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    const auto b = line.find_last_not_of(" \t\r");
    std::string w = line.substr(a, b - a + 1);
    if (std::any_of(w.begin(), w.end(), [](char c) { return c >= 'A' && c <= 'Z'; })) {
      throw std::invalid_argument("stoplist entry not lowercase: " + w);
    }
    s.words.insert(std::move(w));
  }
  return s;
}

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens, const Stoplist& stoplist) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens)
    if (!stoplist.contains(t)) out.push_back(t);
  return out;
}

}  // namespace opt::text
