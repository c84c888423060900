#ifndef RAMREC_RATIONAL_HPP
#define RAMREC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "ramrec/errors.hpp"

namespace ramrec {

// Exact scalar layer. GMP-backed rationals are always stored canonically:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "a", "-a", "a/b" with optional surrounding whitespace.
Rational parse_rational(const std::string& text);

inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) fail(ErrorKind::DivisionByZero, "0 raised to a negative power");
    return Rational(0);
  }
  Rational b = e < 0 ? Rational(1) / base : base;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// All positive divisors of |n| (n != 0), by trial division. The inputs this
// sees are extreme coefficients of user-entered curve polynomials, so they
// stay small; a guard trips on pathological sizes instead of hanging.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace ramrec

#endif
