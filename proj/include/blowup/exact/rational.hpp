#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace blowup {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "+p", "-p" or "±p/q" (q > 0). Throws std::invalid_argument on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string format_rational(const Rational& q);

double to_double(const Rational& q);
bool is_integer(const Rational& q);

BigInt lcm_of(const BigInt& a, const BigInt& b);
BigInt factorial(unsigned n);

}  // namespace blowup
