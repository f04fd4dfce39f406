#pragma once

#include <stdexcept>
#include <string>

namespace softtop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two operands built over different contexts.
struct ContextMismatchError : Error {
  using Error::Error;
};

// Element, parameter, set or claim name that does not resolve.
struct UnknownNameError : Error {
  using Error::Error;
};

// A configured enumeration/closure/case cap would be exceeded.
struct CapExceededError : Error {
  using Error::Error;
};

// Invalid fuzz or enumeration configuration.
struct ConfigError : Error {
  using Error::Error;
};

// Space-file or set-expression syntax error; line is 1-based (0 = no line info).
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

}  // namespace softtop
