#pragma once

#include <stdexcept>
#include <string>

namespace qmem {

/// Input violates a documented precondition (shape, range, normalization).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact enumeration was requested beyond the supported size. Callers
/// must switch to Monte Carlo explicitly; nothing falls back silently.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative numerical routine failed to converge.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw validation_error(message);
}

}  // namespace detail
}  // namespace qmem
