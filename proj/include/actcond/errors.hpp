#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace actcond {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, conditional, belief-base or session text.
/// `offset` is a byte offset into the parsed string; `line` is 1-based
/// (0 when the error is not tied to a line).
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(what), offset_(offset), line_(line) {}
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

/// An atom is used that the relevant signature does not contain.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

/// Exhaustive world enumeration would exceed the configured atom cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t cap) : Error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Operation requires a consistent belief base.
class InconsistentBase : public Error {
 public:
  using Error::Error;
};

/// A conditional id is unknown or duplicated.
class IdError : public Error {
 public:
  using Error::Error;
};

/// Numeric argument outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace actcond
