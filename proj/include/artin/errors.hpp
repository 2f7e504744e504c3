#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Input text did not conform to the defining-graph DSL (or a word string was
// malformed). Carries a 1-based position when one is known.
struct parse_error : std::runtime_error {
  int line = 0;
  int column = 0;
  parse_error(const std::string& msg, int line_ = 0, int column_ = 0)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ", col " +
                                           std::to_string(column_) + ": " + msg
                                     : msg),
        line(line_),
        column(column_) {}
};

// A configured resource bound was hit (braid closure size, coset table size,
// ball size, subset-search width). The caller should shrink the input or
// raise the cap.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates an implementation bug, never bad
// user input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace artin
