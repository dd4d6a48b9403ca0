#pragma once

#include <stdexcept>
#include <string>

namespace skewlab {

/// Invalid data supplied by a caller or read from an input document.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text document.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// A documented precondition was violated by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal invariant failed; indicates a bug in the engine itself.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured budget (element count, search nodes, wall clock) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skewlab
