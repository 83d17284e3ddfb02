#ifndef SFTZETA_NUMBERS_HPP
#define SFTZETA_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sftzeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Decimal rendering of a rational, truncated towards zero after `digits`
/// fractional digits. Exact long division, no floating point.
std::string decimal_string(const Rational& r, int digits);

/// "p/q" for non-integers, plain "p" otherwise.
std::string rational_string(const Rational& r);

/// Smallest digit count (up to `max_digits`) whose decimal renderings of
/// lo and hi differ, or `max_digits` when they never do.
int distinguishing_digits(const Rational& lo, const Rational& hi, int max_digits = 40);

}  // namespace sftzeta

#endif
