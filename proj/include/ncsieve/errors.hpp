#pragma once

#include <stdexcept>
#include <string>

namespace ncsieve {

// Raised when a theorem-backed computation produces something impossible
// (nonzero remainder in an exact division, a non-integer character value).
// Never a recoverable condition.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Group element and configuration built over different ground sets.
class IncompatibleGroup : public std::invalid_argument {
 public:
  explicit IncompatibleGroup(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace ncsieve
