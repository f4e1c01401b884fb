#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigfrust {

// Malformed graph, signature or cycle passed to an operation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numeric parameters outside an operation's domain (e.g. 2k >= n).
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when an exact search would need more states than its budget allows.
// Exact solvers never fall back to an approximate answer.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t lower_bound, std::uint64_t completed)
      : std::runtime_error(what), lower_bound_(lower_bound), completed_(completed) {}

  // Best proven lower bound on the optimum at the time the budget ran out.
  std::size_t lower_bound() const noexcept { return lower_bound_; }
  // Units of work finished (states, subsets or classes depending on the solver).
  std::uint64_t completed() const noexcept { return completed_; }

 private:
  std::size_t lower_bound_;
  std::uint64_t completed_;
};

}  // namespace sigfrust
