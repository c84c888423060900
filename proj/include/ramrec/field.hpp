#ifndef RAMREC_FIELD_HPP
#define RAMREC_FIELD_HPP

#include <string>
#include <vector>

#include "ramrec/rational.hpp"

namespace ramrec {

// Element of the cyclotomic field Q(zeta_N), stored in the power basis
// 1, z, ..., z^{phi(N)-1} of Q[z]/Phi_N(z) with z = zeta_N = e^{2*pi*i/N}.
// The representation is always the canonical reduction mod Phi_N, so equality
// is a coefficient comparison once conductors are unified. N = 1 or 2 encodes
// plain rationals.
class FieldElement {
 public:
  FieldElement() : conductor_(1), coeffs_(1, Rational(0)) {}

  static FieldElement from_rational(const Rational& q) {
    FieldElement e;
    e.coeffs_[0] = q;
    return e;
  }
  static FieldElement from_int(long v) { return from_rational(Rational(v)); }
  static FieldElement zero() { return FieldElement(); }
  static FieldElement one() { return from_int(1); }

  // zeta_N^(j mod N) as an element of Q(zeta_N).
  static FieldElement root_of_unity(unsigned n, long j);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Throws unless is_rational().
  Rational rational_value() const;

  // Image under Q(zeta_N) -> Q(zeta_M); requires N | M.
  FieldElement embedded(unsigned m) const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Deterministic total order (conductor-unified coefficient lex); used only
  // for canonical sorting, it has no arithmetic meaning.
  int cmp(const FieldElement& o) const;

  // Textual form: "a/b" when rational, otherwise "c0 + c1*z + c2*z^2 + ...".
  std::string to_string() const;
  // Inverse of to_string for a stated conductor; bit-exact round trip.
  static FieldElement parse(const std::string& text, unsigned conductor);

 private:
  FieldElement(unsigned n, std::vector<Rational> c)
      : conductor_(n), coeffs_(std::move(c)) {}
  void reduce_tail(std::vector<Rational>& raw) const;  // mod Phi_N, degree < N input

  unsigned conductor_;
  std::vector<Rational> coeffs_;  // size = phi(conductor_)
};

unsigned euler_phi(unsigned n);
// Monic integer coefficients of Phi_n, ascending powers; cached.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

}  // namespace ramrec

#endif
