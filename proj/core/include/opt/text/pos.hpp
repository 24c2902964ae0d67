#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opt::text {

enum class PosTag { NOUN, VERB, ADJ, ADV, PRON, DET, ADP, CONJ, NUM, X };

std::string_view to_string(PosTag tag);

/// Closed-class lexicon first, then suffix rules:
///   digits -> NUM; non-letters -> X; -ly -> ADV; -ing, -ed -> VERB;
///   -ous, -ful, -ive, -able, -ible, -less, -al, -ic -> ADJ;
///   -s after a pronoun -> VERB; anything else -> NOUN.
std::vector<std::pair<std::string, PosTag>> pos_tag(std::span<const std::string> tokens);

}  // namespace opt::text
