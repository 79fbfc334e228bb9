#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace multischur {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with the sign on the numerator, or "p" when q == 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" and finite decimals such as "-0.25" or "1e-3"; the
/// result is the exact rational the text denotes.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

BigInt factorial(int k);
BigInt binomial(int n, int k);
/// k!! with the conventions 0!! = (-1)!! = 1.
BigInt double_factorial(int k);

}  // namespace multischur
