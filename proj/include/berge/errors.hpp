#pragma once

#include <stdexcept>
#include <string>

namespace berge {

// Precondition violation on caller-supplied data (vertex out of range,
// invalid construction parameters, malformed cycle, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace berge
