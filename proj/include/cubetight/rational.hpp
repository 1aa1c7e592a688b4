#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubetight {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", an integer, or a finite decimal ("2.125", "-1e-3") exactly.
/// Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

/// Fixed 15-digit decimal rendering, rounded half away from zero.
std::string format_decimal(const Rational& r, int digits = 15);

double to_double(const Rational& r);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
/// Requires lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Exact value of a finite double.
Rational from_double(double x);

}  // namespace cubetight
