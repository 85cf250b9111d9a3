#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace melonic {

using BigInt = boost::multiprecision::cpp_int;

// cpp_rational keeps gcd(|p|, q) = 1 and q >= 1 after every operation, and
// stores zero as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q" with the denominator always present ("3/1", "-1/2", "0/1").
std::string to_string(const Rational& r);
std::string to_string(const BigInt& i);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace melonic
