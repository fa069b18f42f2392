#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mvg {

// Every library failure derives from Error. The CLI maps the categories to
// exit codes: InputError 3, ResourceError 4, NotAGroupError 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user data.
class InputError : public Error {
 public:
  using Error::Error;
};

// Builder parameters that do not yield an integral, nonnegative table.
class ParameterError : public InputError {
 public:
  using InputError::InputError;
};

// The operation is not defined for this kind of object (e.g. order != 3).
class UnsupportedError : public InputError {
 public:
  using InputError::InputError;
};

// A size cap was exceeded or an integer overflowed.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Invariant broken inside the library; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// A well-formed table that violates one of the multivalued group axioms.
class NotAGroupError : public Error {
 public:
  NotAGroupError(std::string axiom, std::vector<std::size_t> witness);

  const std::string& axiom() const { return axiom_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::size_t> witness_;
};

}  // namespace mvg
