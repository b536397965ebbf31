#pragma once

#include <stdexcept>
#include <string>

namespace schroder {

/// A refused computation: the requested order exceeds a configured ceiling.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary series operation on operands with different truncation orders.
class TruncationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace schroder
