#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible port counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented precondition (negative entry, s = 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix, decomposition, schedule or config text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Constrained matching failed to cover a critical row or column.
class InfeasibleCoverage : public Error {
 public:
  using Error::Error;
};

/// A set of matchings does not touch every positive cell of a demand matrix.
class Uncoverable : public Error {
 public:
  using Error::Error;
};

}  // namespace spectra
