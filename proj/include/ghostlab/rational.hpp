#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ghostlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0, always including the denominator ("1/1", "0/1").
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// Accepts "p/q" or a bare integer.
Rational parse_rational(const std::string& text);

BigInt big_pow(const BigInt& base, unsigned exp);

}  // namespace ghostlab
