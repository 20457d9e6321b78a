#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tambara {

// Malformed or mismatched input (object mismatch, bad JSON shape, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A norm was requested along a map outside the indexing system.
class IndexingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The functor lacks an operation the caller needs (norm on a Green functor).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pair violates the pullback-square condition of the right adjoint, or a
// generator image violates a pushout compatibility condition.
class MembershipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was applied to an element at the wrong level.
class LevelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration would exceed the configured size budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tambara
