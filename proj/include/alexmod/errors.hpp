#pragma once

#include <stdexcept>
#include <string>

namespace alexmod {

/// Malformed or inconsistent input (bad file, unknown generator, wrong spec).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error carrying a 1-based source location.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A configured computation cap (minor size, window radius) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bound or formula whose hypotheses the input does not meet (for example
/// a curve that is not transverse to the line at infinity).
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a long computation observes a cancellation request.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("computation cancelled") {}
};

}  // namespace alexmod
