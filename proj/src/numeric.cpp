#include "mmtp/numeric.hpp"

#include "mmtp/error.hpp"

namespace mmtp {

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) throw Error(Errc::malformed, "not a rational: '" + text + "'");
      return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw Error(Errc::malformed, "not a rational: '" + text + "'");
    BigInt d(den);
    if (d == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + text + "'");
    return Rational(BigInt(num), d);
  } catch (const std::exception& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(Errc::malformed, "not a rational: '" + text + "'");
  }
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return 1;
  if (base == 0) {
    if (exponent < 0) throw Error(Errc::division_by_zero, "0 raised to a negative power");
    return 0;
  }
  const unsigned long k = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  BigInt num = pow(numerator(base), static_cast<unsigned>(k));
  BigInt den = pow(denominator(base), static_cast<unsigned>(k));
  if (exponent < 0) std::swap(num, den);
  return Rational(num, den);
}

}  // namespace mmtp
