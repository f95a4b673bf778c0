#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fca {

// Dimension mismatches, invalid concepts and other caller errors are reported
// as std::invalid_argument. The types below carry extra context.

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    MalformedHeader,    // bad magic, missing or non-numeric dimensions
    DimensionMismatch,  // wrong row width, missing or surplus lines
    IllegalCell,        // a cell outside the format's alphabet
  };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  // 1-based.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// A configured resource cap (concept count, oracle subset count) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An extent handed to attribute reduction is not closed in its context.
class NotClosedError : public std::invalid_argument {
 public:
  NotClosedError(std::size_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}

  std::size_t extent_index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace fca
