#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace mmtp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q". Throws Error(Errc::malformed) on bad syntax or q == 0.
Rational parse_rational(const std::string& text);

// "p" when integral, "p/q" otherwise; q > 0 always.
std::string rational_to_string(const Rational& value);

// Exact power with integer exponent; negative exponents require base != 0.
Rational rational_pow(const Rational& base, long exponent);

}  // namespace mmtp
