#pragma once

#include <stdexcept>
#include <string>

namespace maxent {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar text, state file, or CLI argument value.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a state of the wrong kind
/// (e.g. a parametric state handed to the exact detector).
class ModeError : public Error {
 public:
  using Error::Error;
};

/// The |p|^2 substitution is not valid for this state.
class MagnitudeModeError : public Error {
 public:
  using Error::Error;
};

/// Precondition violated by an otherwise well-formed argument.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxent
