#pragma once

#include <stdexcept>
#include <string>

namespace snakedimer {

// Raised on malformed input: bad words, inconsistent labelings, invalid covers,
// out-of-range entries.  The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration would exceed the configured search-space guard.
// The CLI maps this to exit code 3.
struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snakedimer
