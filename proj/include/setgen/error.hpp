#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace setgen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed goal, graph, instance or mapping text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An exact search or count outgrew its OracleBudget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Rejection sampling ran out of attempts.
class GenerationExhausted : public Error {
 public:
  using Error::Error;
};

// reduce_isip called with |V1| > |V2|.
class SizeOrderError : public Error {
 public:
  using Error::Error;
};

// Invalid argument or configuration (bad class id, zero engines, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace setgen
