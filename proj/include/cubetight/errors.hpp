#pragma once

#include <stdexcept>
#include <string>

namespace cubetight {

/// A caller-side problem: malformed input or a violated precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Always a bug in the library or in a
/// hand-built structure that bypassed validation.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cubetight
