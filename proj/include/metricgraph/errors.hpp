#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mg {

// Violated precondition or semantic constraint (unknown endpoint, mismatched
// ambients, nonpositive length, ...). The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. Carries the 1-based line number when the source is
// a file; 0 for single-token parses. CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mg
