#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace manyval {

// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A search ran out of its wall-clock or node budget. Distinct from a
// negative verdict: the caller learns nothing about the answer.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(const std::string& what) : Error(what) {}
};

// Parse error with a position in the offending input (1-based).
class SourceError : public Error {
 public:
  SourceError(int line, int column, const std::string& message,
              std::vector<std::string> expected = {})
      : Error(format(line, column, message, expected)),
        line_(line),
        column_(column),
        message_(message),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(int line, int column, const std::string& message,
                            const std::vector<std::string>& expected) {
    std::string s = "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message;
    if (!expected.empty()) {
      s += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) s += ", ";
        s += expected[i];
      }
      s += ")";
    }
    return s;
  }

  int line_;
  int column_;
  std::string message_;
  std::vector<std::string> expected_;
};

}  // namespace manyval
