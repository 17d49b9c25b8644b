#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in different ambient dimensions, or an index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (non-prime order,
/// nonzero constant term, missing critical point, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No Nakayama certificate up to the degree bound.
class NotIsolatedWithinBound : public Error {
 public:
  explicit NotIsolatedWithinBound(unsigned d_max)
      : Error("no certificate m^D in J_f found for D <= " + std::to_string(d_max) +
              ": the singularity is either non-isolated or needs a larger degree bound "
              "(the two cases cannot be told apart by this procedure)"),
        d_max_(d_max) {}

  unsigned d_max() const noexcept { return d_max_; }

 private:
  unsigned d_max_;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

/// The character vector does not split as a*(one character) + b*(all the others).
class NoDecomposition : public Error {
 public:
  using Error::Error;
};

class PreconditionNotReal : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class PreconditionFixedPoints : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace eqm
