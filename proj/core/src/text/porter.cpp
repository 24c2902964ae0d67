#include "opt/text/porter.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>

namespace opt::text {

namespace {

class Stemmer {
public:
  explicit Stemmer(std::string w) : b_(std::move(w)) {}

  std::string run() {
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5a();
    step5b();
    return b_;
  }

private:
  std::string b_;

  bool consonant(std::size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u': return false;
      case 'y': return i == 0 ? true : !consonant(i - 1);
      default: return true;
    }
  }

  // m() of the prefix b_[0, len): the number of VC sequences.
  int measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && consonant(i)) ++i;
    while (i < len) {
      while (i < len && !consonant(i)) ++i;
      if (i >= len) break;
      while (i < len && consonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i)
      if (!consonant(i)) return true;
    return false;
  }

  // *d: the prefix ends with a double consonant.
  bool double_consonant(std::size_t len) const {
    return len >= 2 && b_[len - 1] == b_[len - 2] && consonant(len - 1);
  }

  // *o: the prefix ends cvc with the final c not w, x or y.
  bool cvc(std::size_t len) const {
    if (len < 3) return false;
    if (!consonant(len - 1) || consonant(len - 2) || !consonant(len - 3)) return false;
    const char c = b_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view s) const {
    return b_.size() >= s.size() && std::string_view(b_).substr(b_.size() - s.size()) == s;
  }

  std::size_t stem_len(std::string_view suffix) const { return b_.size() - suffix.size(); }

  void replace_suffix(std::string_view suffix, std::string_view with) {
    b_.resize(stem_len(suffix));
    b_.append(with);
  }

  // Finds the longest matching suffix among rules and, if the stem before it
  // satisfies min_measure, replaces it. Shorter suffixes are never retried.
  void longest_rule(std::initializer_list<std::pair<std::string_view, std::string_view>> rules, int min_measure) {
    const std::pair<std::string_view, std::string_view>* best = nullptr;
    for (const auto& r : rules)
      if (ends(r.first) && (!best || r.first.size() > best->first.size())) best = &r;
    if (best && measure(stem_len(best->first)) > min_measure) replace_suffix(best->first, best->second);
  }

  void step1a() {
    if (ends("sses")) {
      replace_suffix("sses", "ss");
    } else if (ends("ies")) {
      replace_suffix("ies", "i");
    } else if (ends("ss")) {
    } else if (ends("s")) {
      replace_suffix("s", "");
    }
  }

  void step1b() {
    if (ends("eed")) {
      if (measure(stem_len("eed")) > 0) replace_suffix("eed", "ee");
      return;
    }
    std::string_view hit;
    if (ends("ed") && has_vowel(stem_len("ed"))) {
      hit = "ed";
    } else if (ends("ing") && has_vowel(stem_len("ing"))) {
      hit = "ing";
    } else {
      return;
    }
    replace_suffix(hit, "");
    if (ends("at") || ends("bl") || ends("iz")) {
      b_.push_back('e');
    } else if (double_consonant(b_.size())) {
      const char c = b_.back();
      if (c != 'l' && c != 's' && c != 'z') b_.pop_back();
    } else if (measure(b_.size()) == 1 && cvc(b_.size())) {
      b_.push_back('e');
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(stem_len("y"))) b_.back() = 'i';
  }

  void step2() {
    longest_rule({{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
                  {"izer", "ize"},     {"abli", "able"},   {"alli", "al"},    {"entli", "ent"},
                  {"eli", "e"},        {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                  {"ator", "ate"},     {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
                  {"ousness", "ous"},  {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"}},
                 0);
  }

  void step3() {
    longest_rule({{"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
                  {"ical", "ic"},  {"ful", ""},   {"ness", ""}},
                 0);
  }

  void step4() {
    static constexpr std::string_view kSuffixes[] = {"al",   "ance", "ence", "er",  "ic",  "able", "ible",
                                                     "ant",  "ement", "ment", "ent", "ion", "ou",   "ism",
                                                     "ate",  "iti",  "ous",  "ive", "ize"};
    std::string_view best;
    for (auto s : kSuffixes)
      if (ends(s) && s.size() > best.size()) best = s;
    if (best.empty()) return;
    const std::size_t len = stem_len(best);
    if (measure(len) <= 1) return;
    if (best == "ion" && !(len > 0 && (b_[len - 1] == 's' || b_[len - 1] == 't'))) return;
    b_.resize(len);
  }

  void step5a() {
    if (!ends("e")) return;
    const std::size_t len = stem_len("e");
    const int m = measure(len);
    if (m > 1 || (m == 1 && !cvc(len))) b_.pop_back();
  }

  void step5b() {
    if (measure(b_.size()) > 1 && double_consonant(b_.size()) && b_.back() == 'l') b_.pop_back();
  }
};

}  // namespace

std::string stem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  if (!std::all_of(word.begin(), word.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
    return std::string(word);
  }
  return Stemmer(std::string(word)).run();
}

}  // namespace opt::text
