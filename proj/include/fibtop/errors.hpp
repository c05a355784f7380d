#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibtop {

/// Malformed textual input (polynomials, words, twist words, presentations).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

}  // namespace fibtop
