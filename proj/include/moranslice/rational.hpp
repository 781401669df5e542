#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace moran {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a plain integer, optional leading minus. Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Exact decimal form: "p/q" with q > 1, otherwise just "p".
std::string rational_to_string(const Rational& r);

// Natural log of a positive big integer, accurate to double precision
// regardless of magnitude.
double log_big(const BigInt& x);

double to_double(const Rational& r);

BigInt pow_big(unsigned base, unsigned exp);

}  // namespace moran
