#pragma once

#include <stdexcept>
#include <string>

namespace polyshare {

/// Raised when a caller violates a precondition or passes malformed input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when well-formed input has no answer in the domain, e.g. an
/// incompatible support family or a failed extension search.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace detail
}  // namespace polyshare
