#pragma once

#include <stdexcept>
#include <string>

namespace hyper {

// Raised for precondition violations: bad indices, empty operands, oversized
// searches, malformed arguments.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hyper
