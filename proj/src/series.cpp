#include "ramrec/series.hpp"

#include <algorithm>

namespace ramrec {

namespace {

// First variable of p that carries an assignment, or -1.
VarId pick_assigned_var(const MultiPoly& p, const std::map<VarId, FieldSeries>& assign) {
  for (VarId v : p.vars())
    if (assign.count(v)) return v;
  return -1;
}

}  // namespace

FieldSeries eval_poly_at_series_full(const MultiPoly& p,
                                     const std::map<VarId, FieldSeries>& assign) {
  if (p.is_zero()) return FieldSeries::exact_zero();
  if (p.is_constant()) return FieldSeries::monomial(p.constant_value(), 0);
  VarId v = pick_assigned_var(p, assign);
  if (v < 0) fail(ErrorKind::InternalError, "series evaluation: unassigned variable");
  const FieldSeries& sv = assign.at(v);
  std::vector<MultiPoly> cs = p.coefficients_in(v);
  // Horner in the assigned variable.
  FieldSeries acc = FieldSeries::exact_zero();
  for (size_t i = cs.size(); i-- > 0;) {
    acc = acc * sv;
    if (!cs[i].is_zero()) acc = acc + eval_poly_at_series_full(cs[i], assign);
  }
  return acc;
}

RatFunSeries eval_poly_at_series(const MultiPoly& p,
                                 const std::map<VarId, FieldSeries>& assign) {
  if (p.is_zero()) return RatFunSeries::exact_zero();
  VarId v = pick_assigned_var(p, assign);
  if (v < 0) return RatFunSeries::monomial(RationalFunction::from_poly(p), 0);
  RatFunSeries sv = promote_series(assign.at(v));
  std::vector<MultiPoly> cs = p.coefficients_in(v);
  RatFunSeries acc = RatFunSeries::exact_zero();
  for (size_t i = cs.size(); i-- > 0;) {
    acc = acc * sv;
    if (!cs[i].is_zero()) acc = acc + eval_poly_at_series(cs[i], assign);
  }
  return acc;
}

FieldSeries substitute_series_full(const RationalFunction& f,
                                   const std::map<VarId, FieldSeries>& assign,
                                   long cap_order) {
  FieldSeries num = eval_poly_at_series_full(f.num(), assign);
  if (f.den().is_constant()) {
    FieldElement d = f.den().constant_value();
    return d.is_one() ? num : num.scaled(d.inverse());
  }
  FieldSeries den = eval_poly_at_series_full(f.den(), assign);
  if (den.known_zero())
    fail(ErrorKind::DivisionByZeroSeries,
         "denominator vanishes identically under the assignment");
  return num.divided_by(den, cap_order);
}

RatFunSeries substitute_series(const RationalFunction& f,
                               const std::map<VarId, FieldSeries>& assign,
                               long cap_order) {
  RatFunSeries num = eval_poly_at_series(f.num(), assign).truncated(cap_order);
  if (f.den().is_constant()) {
    FieldElement d = f.den().constant_value();
    return d.is_one() ? num : num.scaled(RationalFunction::constant(d.inverse()));
  }
  bool den_scalar = true;
  for (VarId v : f.den().vars())
    if (!assign.count(v)) den_scalar = false;
  if (den_scalar) {
    FieldSeries den = eval_poly_at_series_full(f.den(), assign);
    if (den.known_zero())
      fail(ErrorKind::DivisionByZeroSeries,
           "denominator vanishes identically under the assignment");
    return num * promote_series(den.inverted(cap_order));
  }
  RatFunSeries den = eval_poly_at_series(f.den(), assign);
  if (den.known_zero())
    fail(ErrorKind::DivisionByZeroSeries,
         "denominator vanishes identically under the assignment");
  return num.divided_by(den, cap_order);
}

}  // namespace ramrec
