#pragma once

#include <stdexcept>
#include <string>

namespace implicitus {

// Malformed or schema-violating input. The CLI maps it to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Facts that parse but contradict each other (cyclic parents, conflicting
// signatures, unknown symbols in synthetic trees). Exit code 2.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace implicitus
