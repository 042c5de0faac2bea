#include "graphicable/rational.hpp"

#include <algorithm>
#include <cctype>

#include "graphicable/errors.hpp"

namespace graphicable {

namespace {

using boost::multiprecision::cpp_int;

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

cpp_int parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return cpp_int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw ParseError("not a rational number: \"" + std::string(text) + "\"");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));

  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not a rational number: \"" + std::string(text) + "\"");
  }
  const cpp_int d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace graphicable
