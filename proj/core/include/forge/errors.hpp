#pragma once

#include <stdexcept>
#include <string>

namespace forge {

// Malformed input documents (CLI exit code 1).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Violated mathematical preconditions: invalid fans, degenerate matrices,
// failed classification checks (CLI exit code 2).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures such as Newton non-convergence (CLI exit code 3).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace forge
