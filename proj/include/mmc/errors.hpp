#pragma once

#include <stdexcept>
#include <string>

namespace mmc {

// Thrown when an operation would exceed the library's deliberate scale limits
// (dense dimension, state-sum component count, spin count, ...). Callers that
// want to distinguish "too big" from "bad input" can catch this separately.
class refused_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mmc
