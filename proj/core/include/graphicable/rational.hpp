#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphicable {

/// Arbitrary-precision exact rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-7", "2/4" (normalized to 1/2). Throws ParseError on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "0", "1", "-3", "1/2": the inverse of parse_rational on normalized values.
std::string to_string(const Rational& r);

}  // namespace graphicable
