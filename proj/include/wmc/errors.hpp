#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text that does not conform to a file format. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A formula or circuit that violates its structural invariants.
class MalformedInstance : public Error {
 public:
  using Error::Error;
};

/// The instance is outside what the selected algorithm accepts
/// (weighted input to a plain algorithm, width > 3 for the #3SAT route, ...).
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

/// Search exceeded its node budget. Never accompanied by a partial count.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A simplification rule was asked to fire where its precondition fails.
class RuleNotApplicable : public Error {
 public:
  using Error::Error;
};

/// Exhaustive oracles refuse instances above their size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace wmc
