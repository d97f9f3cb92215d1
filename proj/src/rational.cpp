#include "braids/rational.hpp"

#include "braids/errors.hpp"

namespace braids {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational literal: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw ParseError("bad rational literal '" + text + "': " + e.what());
  }
}

std::string rational_to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace braids
