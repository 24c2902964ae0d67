#include "opt/text/pos.hpp"

#include <algorithm>
#include <unordered_map>

namespace opt::text {

namespace {

const std::unordered_map<std::string_view, PosTag>& lexicon() {
  static const std::unordered_map<std::string_view, PosTag> lex = [] {
    std::unordered_map<std::string_view, PosTag> m;
    for (auto w : {"the", "a", "an", "this", "that", "these", "those", "each", "every", "some", "any", "no",
                   "all", "both", "either", "neither", "another"}) {
      m.emplace(w, PosTag::DET);
    }
    for (auto w : {"in", "on", "at", "by", "for", "with", "about", "against", "between", "into", "through",
                   "during", "before", "after", "above", "below", "to", "from", "up", "down", "of", "off",
                   "over", "under", "near", "without", "within", "across", "behind", "beyond", "since",
                   "toward", "towards", "upon", "among", "around"}) {
      m.emplace(w, PosTag::ADP);
    }
    for (auto w : {"i", "me", "my", "mine", "you", "your", "yours", "he", "him", "his", "she", "her", "hers",
                   "it", "its", "we", "us", "our", "ours", "they", "them", "their", "theirs", "myself",
                   "yourself", "himself", "herself", "itself", "ourselves", "themselves", "who", "whom",
                   "whose", "which", "what", "someone", "something", "anyone", "anything", "everyone",
                   "everything", "nobody", "nothing"}) {
      m.emplace(w, PosTag::PRON);
    }
    for (auto w : {"and", "or", "but", "nor", "so", "yet", "because", "although", "though", "while", "if",
                   "unless", "whether", "than"}) {
      m.emplace(w, PosTag::CONJ);
    }
    for (auto w : {"is", "am", "are", "was", "were", "be", "been", "being", "have", "has", "had", "do",
                   "does", "did", "will", "would", "shall", "should", "can", "cannot", "could", "may",
                   "might", "must"}) {
      m.emplace(w, PosTag::VERB);
    }
    for (auto w : {"not", "very", "too", "also", "never", "always", "often", "here", "there", "now", "then",
                   "just", "still", "again", "soon"}) {
      m.emplace(w, PosTag::ADV);
    }
    for (auto w : {"good", "bad", "new", "old", "great", "big", "small", "high", "low", "long", "short"}) {
      m.emplace(w, PosTag::ADJ);
    }
    for (auto w : {"one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "hundred",
                   "thousand", "million"}) {
      m.emplace(w, PosTag::NUM);
    }
    return m;
  }();
  return lex;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

PosTag suffix_tag(std::string_view w, PosTag prev, bool has_prev) {
  if (std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; })) return PosTag::NUM;
  if (!std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; })) return PosTag::X;
  if (ends_with(w, "ly")) return PosTag::ADV;
  if (ends_with(w, "ing") || ends_with(w, "ed")) return PosTag::VERB;
  for (auto s : {"ous", "ful", "ive", "able", "ible", "less", "al", "ic"})
    if (ends_with(w, s)) return PosTag::ADJ;
  if (ends_with(w, "s") && has_prev && prev == PosTag::PRON) return PosTag::VERB;
  return PosTag::NOUN;
}

}  // namespace

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::NOUN: return "NOUN";
    case PosTag::VERB: return "VERB";
    case PosTag::ADJ: return "ADJ";
    case PosTag::ADV: return "ADV";
    case PosTag::PRON: return "PRON";
    case PosTag::DET: return "DET";
    case PosTag::ADP: return "ADP";
    case PosTag::CONJ: return "CONJ";
    case PosTag::NUM: return "NUM";
    case PosTag::X: return "X";
  }
  return "X";
}

std::vector<std::pair<std::string, PosTag>> pos_tag(std::span<const std::string> tokens) {
  std::vector<std::pair<std::string, PosTag>> out;
  out.reserve(tokens.size());
  const auto& lex = lexicon();
  for (const auto& t : tokens) {
    PosTag tag;
    if (auto it = lex.find(t); it != lex.end()) {
      tag = it->second;
    } else if (t.empty()) {
      tag = PosTag::X;
    } else {
      tag = suffix_tag(t, out.empty() ? PosTag::X : out.back().second, !out.empty());
    }
    out.emplace_back(t, tag);
  }
  return out;
}

}  // namespace opt::text
