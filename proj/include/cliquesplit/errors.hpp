#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquesplit {

/// Base class for failures raised by the library that are not plain
/// precondition violations (those use std::invalid_argument / std::out_of_range).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cliquesplit
