#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "qlab/setspec.hpp"

namespace qlab {

// Raised for any defect in a set-description string: malformed syntax and
// also semantically invalid parameters (a <= 1, digit >= base, ...). The
// position is a 0-based byte offset into the input; for semantic errors it
// points at the opening parenthesis of the offending constructor.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace between tokens is ignored everywhere):
//
//   spec := "interval-union(a=" rat ", b=" rat ")"
//         | "leading-digit(base=" int ", digits={" int-list "})"
//         | "powers(base=" int ", min-exp=" int ")"
//         | "factorial(" ("A" | "B") ")"
//         | "union(" spec ";" spec ")"
//         | "explicit(" int-list ")"
//         | "delta-family(" rat ")"
//   rat  := integer | integer "/" positive-integer | decimal literal
//
// Decimal literals are exact: "0.4" parses as 2/5, never as a float.
// delta-family is sugar: it builds the two-parameter family achieving lower
// density exactly delta, so the parsed tree is a plain interval-union (or
// the power set when delta = 0) and carries no memory of the sugar.
SetSpec parse_spec(const std::string& text);

// Canonical text for a spec. render_spec(parse_spec(s)) always parses back
// to a tree equal to parse_spec(s).
std::string render_spec(const SetSpec& spec);

}  // namespace qlab
