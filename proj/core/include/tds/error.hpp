#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tds {

/// Caller passed something that violates an operation's contract
/// (out-of-range node, size mismatch, non-bijective map, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A text input did not match the expected grammar.
class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Model parameters for which a quantity is undefined (zero variance, ps = 1).
class DegenerateParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tds
