#pragma once

#include <stdexcept>
#include <string>

namespace grafts {

/// Malformed input: unknown ids, violated preconditions, bad files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured solver limit was exceeded. Never silently approximated.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug or an input that slipped
/// past recognition.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace grafts
