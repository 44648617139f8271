#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace framecover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Out-of-range or inconsistent arguments. Maps to CLI exit code 2.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  int line_;
  int column_;
};

/// An exact search refused to run, or gave up, because a budget was exceeded.
/// Carries the best upper bound found so far when there is one.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what, std::optional<long long> best_upper = std::nullopt)
      : Error(what), best_upper_(best_upper) {}

  std::optional<long long> best_upper() const { return best_upper_; }

 private:
  std::optional<long long> best_upper_;
};

}  // namespace framecover
