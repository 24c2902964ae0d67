#pragma once

#include <stdexcept>
#include <string>

namespace opt::harness {

/// Bad input data: malformed corpus, config or CSV. The CLI maps it to exit
/// code 2.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace opt::harness
