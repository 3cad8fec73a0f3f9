#pragma once

#include <stdexcept>
#include <string>

namespace lpbus {

// Text-format failure (code or trace files); carries the 1-based line.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A received word is not in the configured code.
class codeword_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a documented desk-scale bound.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpbus
