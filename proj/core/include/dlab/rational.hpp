#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dlab {

// All arithmetic in the library is exact. Rat is an arbitrary-precision
// rational, always stored in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Parses "p", "p/q" or a plain decimal ("-0.25" -> -1/4). Throws ParseError
// on anything else; q must be nonzero.
Rat parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rat& value);

inline Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

// Largest integer <= value / smallest integer >= value.
Int rat_floor(const Rat& value);
Int rat_ceil(const Rat& value);

}  // namespace dlab
