#pragma once

#include <string>
#include <string_view>

namespace opt::text {

/// Porter (1980) stemmer, all five steps, original rule set. Tokens that are
/// not purely lowercase ASCII letters, and tokens of length <= 2, are returned
/// unchanged.
std::string stem(std::string_view word);

}  // namespace opt::text
