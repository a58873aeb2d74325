#pragma once

#include <stdexcept>
#include <string>

namespace reconf {

/// Malformed or out-of-contract input (unknown vertex, dependent start set,
/// threshold above the set size, bad file). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. The CLI maps it to exit code 3.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The brute-force oracle refuses graphs above its vertex cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reconf
