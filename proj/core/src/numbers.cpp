#include "sftzeta/numbers.hpp"

#include <sstream>

namespace sftzeta {

std::string decimal_string(const Rational& r, int digits) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  std::ostringstream os;
  if (num < 0) {
    os << "-";
    num = -num;
  }
  os << (num / den);
  if (digits > 0) {
    os << ".";
    BigInt rem = num % den;
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      os << (rem / den);
      rem %= den;
    }
  }
  return os.str();
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

int distinguishing_digits(const Rational& lo, const Rational& hi, int max_digits) {
  if (lo == hi) return 6;
  for (int d = 1; d < max_digits; ++d)
    if (decimal_string(lo, d) != decimal_string(hi, d)) return d + 2 > max_digits ? max_digits : d + 2;
  return max_digits;
}

}  // namespace sftzeta
