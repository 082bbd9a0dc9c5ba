#pragma once

#include <stdexcept>
#include <string>

namespace a1c {

/// Raised when an input violates an operation's precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace a1c
