#include "fairdiv/rational.hpp"

#include <cctype>

namespace fairdiv {

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty fraction");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_plain_integer(s)) throw ParseError("not a fraction: '" + text + "'");
      return Rational(Integer(s));
    }
    const std::string num = strip(s.substr(0, slash));
    const std::string den = strip(s.substr(slash + 1));
    if (!is_plain_integer(num) || !is_plain_integer(den)) {
      throw ParseError("not a fraction: '" + text + "'");
    }
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a fraction: '" + text + "'");
  }
}

std::string format_rational(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_extended(const ExtendedRational& value) {
  if (value.is_infinite()) return "inf";
  return format_rational(*value.finite);
}

}  // namespace fairdiv
