#pragma once

#include <stdexcept>

namespace qpv {

/// A computation would exceed a configured size or degree cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solver found a solution space of the wrong dimension.
class NoSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpv
