#pragma once

#include <stdexcept>
#include <string>

namespace bent {

// Invalid construction parameters (non-bijective table, failed congruence, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation undefined for the given value (inverse of zero, dual of a non-bent function).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input file. `line` is 1-based; 0 when no single line is to blame.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A size guard refused an exhaustive computation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bent
