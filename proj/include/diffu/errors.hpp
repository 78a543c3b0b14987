#pragma once

#include <stdexcept>
#include <string>

namespace diffu {

/// The requested computation is valid but exceeds the size this operation supports.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace diffu
