#pragma once

#include <stdexcept>
#include <string>

namespace asymada {

// Invalid arguments or flags supplied by a caller.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed, inconsistent or degenerate input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace asymada
