#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace univoque {

// plain-value (no expression template) flavors keep std::min/std::max and
// auto deductions unsurprising
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// b^e for e >= 0.
BigInt pow_big(const BigInt& b, unsigned e);

// r^e, any sign of e (r != 0 for e < 0).
Rational pow_rational(const Rational& r, long e);

// floor(r) as an integer.
BigInt floor_rational(const Rational& r);

// ceil(r) as an integer.
BigInt ceil_rational(const Rational& r);

// Largest integer strictly below r.
BigInt strict_floor_rational(const Rational& r);

bool is_integer(const Rational& r);

// Rational enclosure of sqrt(c) with width 2^-bits; c >= 0.
// Returns [lo, hi] with lo <= sqrt(c) <= hi.
std::pair<Rational, Rational> sqrt_enclosure(const BigInt& c, unsigned bits);

// Exact value of a decimal string like "-12.3425e-2". Throws ParseError.
Rational parse_decimal(const std::string& text);

// Round-to-nearest decimal rendering with `digits` fractional digits,
// trailing zeros trimmed (but at least one digit kept after the point).
std::string format_decimal(const Rational& r, int digits);

double to_double(const Rational& r);

// log_base(num/den) for positive integers, evaluated in extended precision;
// accurate to well below 1e-12 for the magnitudes used here.
double log_ratio(const BigInt& num, const BigInt& den, double base);

} // namespace univoque
