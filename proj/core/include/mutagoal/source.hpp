#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mutagoal {

/// Half-open source region; columns and lines are 1-based.
struct Span {
  int line = 0;
  int col = 0;
  int end_line = 0;
  int end_col = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

/// Base for everything that can go wrong while loading a program from text.
class LoadError : public std::runtime_error {
 public:
  LoadError(std::string file, Span span, const std::string& message)
      : std::runtime_error(file.empty() ? message
                                        : file + ":" + std::to_string(span.line) + ":" +
                                              std::to_string(span.col) + ": " + message),
        file_(std::move(file)),
        span_(span) {}

  const std::string& file() const { return file_; }
  const Span& span() const { return span_; }

 private:
  std::string file_;
  Span span_;
};

/// Lexical or grammatical error. Carries the token set the parser would
/// have accepted at the failure point.
class ParseError : public LoadError {
 public:
  ParseError(std::string file, Span span, const std::string& message,
             std::vector<std::string> expected = {})
      : LoadError(std::move(file), span, message), expected_(std::move(expected)) {}

  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

/// Name-resolution or structural error found after a syntactically valid parse:
/// duplicate declarations, unresolved invocation targets, malformed returns.
class ResolveError : public LoadError {
 public:
  using LoadError::LoadError;
};

/// Warn-level finding recorded during load or focal segmentation.
/// Lints never fail a parse.
struct Lint {
  std::string file;
  Span span;
  std::string subject;  // test id or declaration the lint is about
  std::string message;

  friend bool operator==(const Lint&, const Lint&) = default;
};

}  // namespace mutagoal
