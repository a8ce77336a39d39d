#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rra {

// Malformed text input. `offset` is a character position inside the
// offending line (or expression), `line` is 1-based when known, else 0.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset, std::size_t line = 0)
      : std::runtime_error(format(message, offset, line)),
        detail_(std::move(message)),
        offset_(offset),
        line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(const std::string& m, std::size_t off, std::size_t line) {
    std::string s = line ? "line " + std::to_string(line) + ", " : std::string();
    return s + "offset " + std::to_string(off) + ": " + m;
  }
  std::string detail_;
  std::size_t offset_;
  std::size_t line_;
};

// An operation was applied to an automaton that lacks a required property.
// `requirement` names the missing flag, e.g. "fixed-rewrite-size".
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string requirement, const std::string& message)
      : std::runtime_error(requirement + ": " + message), requirement_(std::move(requirement)) {}
  const std::string& requirement() const noexcept { return requirement_; }

 private:
  std::string requirement_;
};

// A structural invariant of the automaton model is broken.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rra
