#pragma once

#include <stdexcept>
#include <string>

namespace silentdiff {

/// Fatal error for a whole run (bad configuration, unreadable input, broken
/// preconditions). The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Recoverable per-file failure: the file is skipped and a diagnostic kept.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct Diagnostic {
  std::string file;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

}  // namespace silentdiff
