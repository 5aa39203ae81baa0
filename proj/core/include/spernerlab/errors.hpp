#pragma once

#include <stdexcept>
#include <string>

namespace spernerlab {

/// Raised when an operation is called outside the hypotheses it requires.
/// The message names the violated hypothesis.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a guarantee that must hold under valid input is observed to
/// fail. Either the input slipped past validation or the implementation is
/// wrong; in both cases the message carries enough detail to reproduce.
class BugTrap : public std::logic_error {
 public:
  explicit BugTrap(const std::string& what) : std::logic_error(what) {}
};

/// Raised for malformed external input (JSON files, CLI arguments).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spernerlab
