#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qlab {

// Exact arithmetic only: every verdict in this library is computed over
// arbitrary-precision integers and rationals. Floating point appears nowhere
// except inside decimal *rendering* of already-final values.
using Int = boost::multiprecision::cpp_int;
using Nat = Int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an operation is refused on domain grounds (invalid parameters,
// a certificate that cannot exist, an exhausted search bound). Distinct from
// parse errors, which carry input positions.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// base^exp for rational base > 0; negative exponents invert.
Rat rat_pow(const Rat& base, long exp);

// Floor / ceiling of a nonnegative rational. Negative input throws: nothing
// in this library ever takes the floor of a negative quantity, so a negative
// argument is always a logic error worth surfacing.
Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// "n" when the denominator is 1, otherwise "n/d" in lowest terms.
std::string rat_to_string(const Rat& x);

// Exact decimal rendering with `digits` significant digits, round-half-even
// on the last digit. Display only.
std::string rat_to_decimal(const Rat& x, unsigned digits = 15);

// Accepts "p/q", plain integers, and plain decimals ("0.49" -> 49/100), all
// parsed exactly. Throws domain_error on malformed input or q == 0.
Rat rat_from_string(const std::string& text);

}  // namespace qlab
