#ifndef RAMREC_POLY_HPP
#define RAMREC_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramrec/field.hpp"

namespace ramrec {

// Fixed variable universe for a session: t (curve parameter) and p0, p1, ...
using VarId = int;
constexpr VarId kVarT = 0;
inline VarId p_var(int i) { return 1 + i; }
std::string var_name(VarId v);

using ExpVec = std::vector<unsigned>;

// Graded-lexicographic order; leading term of a polynomial is the map maximum.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

// Sparse multivariate polynomial over Q(zeta_N). Stored terms have nonzero
// coefficients; the variable list is minimal (every listed variable occurs)
// and sorted, so equality is structural.
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, FieldElement, GrlexLess>;

  MultiPoly() = default;  // zero
  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly constant(const FieldElement& c);
  static MultiPoly constant(const Rational& q) { return constant(FieldElement::from_rational(q)); }
  static MultiPoly one() { return constant(FieldElement::one()); }
  static MultiPoly variable(VarId v);
  static MultiPoly monomial(const FieldElement& c, VarId v, unsigned e);
  static MultiPoly from_univar(VarId v, const std::vector<FieldElement>& ascending);

  const std::vector<VarId>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  FieldElement constant_value() const;  // requires is_constant or zero
  size_t term_count() const { return terms_.size(); }

  unsigned degree(VarId v) const;
  unsigned total_degree() const;
  FieldElement leading_coefficient() const;  // under grlex; zero poly -> 0

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const FieldElement& c) const;

  bool operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly derivative(VarId v) const;
  MultiPoly renamed(const std::map<VarId, VarId>& mapping) const;  // injective on present vars
  FieldElement eval(const std::map<VarId, FieldElement>& point) const;  // total assignment

  // Dense ascending coefficients in v; all other variables land in the
  // coefficient polynomials.
  std::vector<MultiPoly> coefficients_in(VarId v) const;
  static MultiPoly assemble_in(VarId v, const std::vector<MultiPoly>& coeffs);

  std::string to_string() const;

  // Internal-use constructor from raw parts; normalizes.
  static MultiPoly make(std::vector<VarId> vars, TermMap terms);

 private:
  void normalize();

  std::vector<VarId> vars_;
  TermMap terms_;
};

// Exact quotient when o divides p, nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& o);

// Monic (grlex leading coefficient 1) gcd; gcd(0, b) = monic b.
// Subresultant PRS on a recursive dense view, monomial content stripped first.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

struct RootReport {
  std::vector<std::pair<FieldElement, int>> roots;  // (root, multiplicity)
  int remainder_degree = 0;
  MultiPoly remainder;  // the unfactored cofactor
};

// All roots of a nonzero univariate polynomial that lie in
// Q (divisor search on extreme coefficients) or are rational multiples of
// conductor-th roots of unity (substitution test), with exact multiplicities.
RootReport rational_roots(const MultiPoly& p, unsigned conductor);

// Multiplicity of `a` as a root of univariate p (0 if p(a) != 0).
int vanishing_order(const MultiPoly& p, const FieldElement& a);

}  // namespace ramrec

#endif
