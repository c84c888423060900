#ifndef RAMREC_RATFUN_HPP
#define RAMREC_RATFUN_HPP

#include <string>

#include "ramrec/poly.hpp"

namespace ramrec {

// Multivariate rational function over Q(zeta_N), kept canonical at all times:
// gcd(num, den) = 1 and den has grlex leading coefficient 1. Equality of
// abstract rational functions is therefore structural equality.
class RationalFunction {
 public:
  RationalFunction() : num_(MultiPoly::zero()), den_(MultiPoly::one()) {}
  RationalFunction(MultiPoly num, MultiPoly den);  // canonicalizes

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return constant(FieldElement::one()); }
  static RationalFunction constant(const FieldElement& c);
  static RationalFunction constant(const Rational& q) {
    return constant(FieldElement::from_rational(q));
  }
  static RationalFunction from_int(long v) { return constant(FieldElement::from_int(v)); }
  static RationalFunction variable(VarId v);
  static RationalFunction from_poly(MultiPoly p);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  FieldElement constant_value() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const;
  RationalFunction pow(long e) const;
  // Multiplication by a nonzero scalar preserves canonical form without a gcd.
  RationalFunction scaled(const FieldElement& c) const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction derivative(VarId v) const;
  RationalFunction substituted(VarId v, const RationalFunction& value) const;
  RationalFunction renamed(const std::map<VarId, VarId>& mapping) const;
  bool depends_on(VarId v) const;

  std::string to_string() const;
  std::string to_json_string() const;  // {"vars":..,"num":..,"den":..}

 private:
  MultiPoly num_, den_;
};

}  // namespace ramrec

#endif
