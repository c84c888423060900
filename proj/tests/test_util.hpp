#ifndef RAMREC_TEST_UTIL_HPP
#define RAMREC_TEST_UTIL_HPP

#include <random>

#include "ramrec/series.hpp"

namespace ramrec::testutil {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817);
  return gen;
}

inline long rand_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng());
}

inline Rational rand_rational() {
  long num = rand_int(-12, 12);
  long den = rand_int(1, 9);
  return Rational(num, den);
}

inline FieldElement rand_field_element(unsigned conductor) {
  unsigned phi = euler_phi(conductor);
  FieldElement acc = FieldElement::from_rational(rand_rational());
  for (unsigned i = 1; i < phi; ++i) {
    FieldElement term = FieldElement::from_rational(rand_rational()) *
                        FieldElement::root_of_unity(conductor, static_cast<long>(i));
    acc += term;
  }
  return acc;
}

inline MultiPoly rand_poly(const std::vector<VarId>& vars, unsigned max_deg, int terms) {
  MultiPoly acc = MultiPoly::zero();
  for (int i = 0; i < terms; ++i) {
    MultiPoly mono = MultiPoly::constant(rand_rational());
    for (VarId v : vars) {
      unsigned e = static_cast<unsigned>(rand_int(0, static_cast<long>(max_deg)));
      if (e) mono = mono * MultiPoly::monomial(FieldElement::one(), v, e);
    }
    acc = acc + mono;
  }
  return acc;
}

inline RationalFunction rand_ratfun(const std::vector<VarId>& vars, unsigned max_deg,
                                    int terms) {
  MultiPoly num = rand_poly(vars, max_deg, terms);
  MultiPoly den = MultiPoly::zero();
  while (den.is_zero()) den = rand_poly(vars, max_deg, terms);
  return RationalFunction(num, den);
}

inline FieldSeries rand_series(long val, long order, unsigned conductor = 1) {
  std::vector<FieldElement> c;
  for (long e = val; e <= order; ++e)
    c.push_back(rand_int(0, 3) == 0 ? FieldElement::zero() : rand_field_element(conductor));
  return FieldSeries::from_coeffs(val, std::move(c), order);
}

}  // namespace ramrec::testutil

#endif
