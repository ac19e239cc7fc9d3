#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sl3pong {

// Typed errors. Every arithmetic precondition violation surfaces as one of
// these; nothing in the engine ever traps or returns garbage silently.

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("singular matrix") {}
};

struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what)
      : std::runtime_error("precondition violated: " + what) {}
};

struct CoefficientError : std::runtime_error {
  explicit CoefficientError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        pos(position) {}
};

struct ConstructionError : std::runtime_error {
  std::string entry;
  ConstructionError(const std::string& entry_name, const std::string& what)
      : std::runtime_error("constant '" + entry_name + "': " + what), entry(entry_name) {}
};

}  // namespace sl3pong
