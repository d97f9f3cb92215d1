#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace braids {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// A point of the complex plane with exact rational coordinates.
struct QPoint {
  Rational re;
  Rational im;

  bool operator==(const QPoint&) const = default;
};

// Parses "p/q" or "p" (q > 0 after normalization). Throws ParseError.
Rational parse_rational(const std::string& text);

// Renders as "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& x);

}  // namespace braids
