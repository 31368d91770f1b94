#pragma once

#include <stdexcept>
#include <string>

namespace kropina {

// Malformed or inconsistent input data: wrong dimensions, invalid structure
// constants, non-positive-definite metrics, unknown catalog names, bad CLI
// parameters.  CLI maps this to exit code 1.
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Evaluation outside the domain of a well-posed object: a covector argument
// on the wrong side of the Kropina cone, a chart point past the injectivity
// radius, a degenerate fundamental tensor at a sample.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kropina
