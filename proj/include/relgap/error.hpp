#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace relgap {

// Bad or unreadable input: files, flags, unknown nodes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a line-oriented input file.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::string text, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what + ": " + text),
        line_(line),
        text_(std::move(text)) {}

  std::size_t line() const { return line_; }
  const std::string& text() const { return text_; }

 private:
  std::size_t line_;
  std::string text_;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-fatal diagnostics collected while processing; the CLI prints them.
using Warnings = std::vector<std::string>;

inline void warn(Warnings* sink, std::string message) {
  if (sink != nullptr) sink->push_back(std::move(message));
}

}  // namespace relgap
