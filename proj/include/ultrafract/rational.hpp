#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ufract {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^exp with exp possibly negative; throws on 0^negative.
Rational rational_pow(const Rational& base, long exp);

double to_double(const Rational& r);

// Accepts "p/q", plain integers, and decimal literals like "0.25".
Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& r);

// True iff r = 2^k for some integer k; if so, k is stored in exponent.
bool is_power_of_two(const Rational& r, long& exponent);

}  // namespace ufract
