#ifndef MSPG_ERROR_H_
#define MSPG_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mspg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation or generator file. `line()` is 0 when the
/// input was not line oriented.
class ParseError : public Error {
 public:
  ParseError(std::string const &what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line),
        detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  /// The message without the line prefix.
  std::string const &detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration, table or lattice cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An argument violated the documented precondition of an operation
/// (subgroup not contained in its parent, non-normal subgroup passed to a
/// quotient, non-prime argument, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mspg

#endif  // MSPG_ERROR_H_
