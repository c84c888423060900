#ifndef RAMREC_SERIES_HPP
#define RAMREC_SERIES_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "ramrec/ratfun.hpp"

namespace ramrec {

// Order sentinel for exactly-known (polynomial) series.
constexpr long kExactOrder = 1L << 40;

inline long sat_order(long x) { return std::min(x, kExactOrder); }
inline long sat_add(long a, long b) {
  if (a >= kExactOrder || b >= kExactOrder) return kExactOrder;
  return std::min(a + b, kExactOrder);
}

// Truncated Laurent series in one local variable s over a coefficient ring R
// (a field: FieldElement or RationalFunction).
//
// Knowledge semantics: every coefficient with exponent <= order_ is known.
// Exponents below val_ are known zero; the stored span is
// [val_, val_ + c_.size() - 1] and coefficients between the span and order_
// are known zero as well. order_ == kExactOrder marks an exactly known
// (Laurent-polynomial) series. A series that is zero up to its truncation
// order has an empty span and val_ == order_ + 1.
//
// Every operation computes the exact window of validity of its result, so an
// in-window coefficient is always exact; asking beyond the window throws
// TruncationUnderflow rather than returning silently wrong data.
template <class R>
class LaurentSeries {
 public:
  LaurentSeries() : val_(kExactOrder + 1), order_(kExactOrder) {}  // exact zero

  static LaurentSeries exact_zero() { return LaurentSeries(); }
  static LaurentSeries zero_to(long order) {
    LaurentSeries s;
    s.order_ = order;
    s.val_ = order + 1;
    return s;
  }
  static LaurentSeries from_ring(const R& c) { return monomial(c, 0); }
  static LaurentSeries one() { return monomial(R::from_int(1), 0); }
  static LaurentSeries monomial(const R& c, long e) {
    LaurentSeries s;
    if (c.is_zero()) return s;
    s.val_ = e;
    s.order_ = kExactOrder;
    s.c_ = {c};
    return s;
  }
  // s itself, exactly.
  static LaurentSeries identity() { return monomial(R::from_int(1), 1); }
  static LaurentSeries from_coeffs(long val, std::vector<R> coeffs, long order) {
    LaurentSeries s;
    s.val_ = val;
    s.order_ = order;
    s.c_ = std::move(coeffs);
    if (val + static_cast<long>(s.c_.size()) - 1 > order)
      fail(ErrorKind::InternalError, "series coefficients exceed their order");
    s.normalize();
    return s;
  }

  long order() const { return order_; }
  bool is_exact() const { return order_ >= kExactOrder; }
  // True if no nonzero coefficient is known (zero up to the truncation order).
  bool known_zero() const { return c_.empty(); }
  // Valuation: exponent of the lowest nonzero coefficient (order_+1 if none).
  long val() const { return val_; }
  size_t span() const { return c_.size(); }

  const R& coeff(long e) const {
    if (e > order_)
      fail(ErrorKind::TruncationUnderflow,
           "coefficient of s^" + std::to_string(e) + " beyond truncation order " +
               std::to_string(order_));
    static const R zero_elem = R();
    if (e < val_ || e >= val_ + static_cast<long>(c_.size())) return zero_elem;
    return c_[static_cast<size_t>(e - val_)];
  }

  // Coefficient of s^{-1}; zero-valuation information must reach -1.
  R residue() const {
    if (order_ < -1)
      fail(ErrorKind::TruncationUnderflow, "residue unknown: order below -1");
    return coeff(-1);
  }

  LaurentSeries truncated(long order) const {
    if (order >= order_) return *this;
    LaurentSeries s;
    s.order_ = order;
    s.val_ = val_;
    if (val_ > order) {
      s.val_ = order + 1;
      return s;
    }
    size_t n = static_cast<size_t>(std::min<long>(static_cast<long>(c_.size()), order - val_ + 1));
    s.c_.assign(c_.begin(), c_.begin() + static_cast<long>(n));
    s.normalize();
    return s;
  }

  LaurentSeries shifted(long k) const {
    LaurentSeries s = *this;
    s.val_ += k;
    s.order_ = sat_add(s.order_, k);
    return s;
  }

  LaurentSeries scaled(const R& c) const {
    if (c.is_zero()) return zero_to(order_);
    LaurentSeries s = *this;
    for (auto& x : s.c_) x = x * c;
    s.normalize();
    return s;
  }

  LaurentSeries operator-() const {
    LaurentSeries s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
  }

  LaurentSeries operator+(const LaurentSeries& o) const {
    LaurentSeries s;
    s.order_ = std::min(order_, o.order_);
    if (c_.empty() && o.c_.empty()) {
      s.val_ = s.order_ + 1;
      return s;
    }
    long lo = c_.empty() ? o.val_ : (o.c_.empty() ? val_ : std::min(val_, o.val_));
    long hi = c_.empty() ? o.top() : (o.c_.empty() ? top() : std::max(top(), o.top()));
    hi = std::min(hi, s.order_);
    if (hi < lo) {
      s.val_ = s.order_ + 1;
      return s;
    }
    s.val_ = lo;
    s.c_.resize(static_cast<size_t>(hi - lo + 1), R());
    for (long e = lo; e <= hi; ++e) {
      R v = get(e) + o.get(e);
      s.c_[static_cast<size_t>(e - lo)] = std::move(v);
    }
    s.normalize();
    return s;
  }

  LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }

  LaurentSeries operator*(const LaurentSeries& o) const {
    LaurentSeries s;
    s.order_ = std::min(sat_add(val_, o.order_), sat_add(o.val_, order_));
    if (c_.empty() || o.c_.empty()) {
      s.val_ = s.order_ + 1;
      return s;
    }
    long lo = val_ + o.val_;
    long hi = std::min(top() + o.top(), s.order_);
    if (hi < lo) {
      s.val_ = s.order_ + 1;
      return s;
    }
    s.val_ = lo;
    s.c_.resize(static_cast<size_t>(hi - lo + 1), R());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      long ea = val_ + static_cast<long>(i);
      if (ea + o.val_ > hi) break;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        long e = ea + o.val_ + static_cast<long>(j);
        if (e > hi) break;
        if (o.c_[j].is_zero()) continue;
        s.c_[static_cast<size_t>(e - lo)] += c_[i] * o.c_[j];
      }
    }
    s.normalize();
    return s;
  }

  // Multiplicative inverse, known to min(-val + (order - val), cap_order).
  LaurentSeries inverted(long cap_order = kExactOrder) const {
    if (c_.empty())
      fail(ErrorKind::DivisionByZeroSeries,
           "series inversion: divisor is zero to its truncation order");
    long rel = order_ >= kExactOrder ? kExactOrder : order_ - val_;
    long result_order =
        std::min(rel >= kExactOrder ? kExactOrder : sat_add(-val_, rel), cap_order);
    if (c_.size() == 1)
      return monomial(R::from_int(1) / c_[0], -val_).truncated(result_order);
    if (result_order >= kExactOrder)
      fail(ErrorKind::InternalError,
           "series inversion of an exact non-monomial needs a truncation cap");
    if (result_order < -val_) return zero_to(result_order);
    long n = result_order + val_;
    std::vector<R> b(static_cast<size_t>(n) + 1, R());
    const R inv0 = R::from_int(1) / c_[0];
    b[0] = inv0;
    for (long m = 1; m <= n; ++m) {
      R acc = R();
      long jmax = std::min<long>(m, static_cast<long>(c_.size()) - 1);
      for (long j = 1; j <= jmax; ++j) {
        if (c_[static_cast<size_t>(j)].is_zero()) continue;
        acc += c_[static_cast<size_t>(j)] * b[static_cast<size_t>(m - j)];
      }
      b[static_cast<size_t>(m)] = -(acc * inv0);
    }
    return from_coeffs(-val_, std::move(b), result_order);
  }

  // Division; shifts the valuation by -val(o). Needs a cap when both operands
  // are exact and the divisor is not a monomial.
  LaurentSeries divided_by(const LaurentSeries& o, long cap_order = kExactOrder) const {
    if (o.c_.empty())
      fail(ErrorKind::DivisionByZeroSeries,
           "series division: divisor is zero to its truncation order");
    if (o.c_.size() == 1) {
      // Monomial divisor: pure shift and scale.
      long rel = o.order_ >= kExactOrder ? kExactOrder : o.order_ - o.val_;
      long inv_order = rel >= kExactOrder ? kExactOrder : sat_add(-o.val_, rel);
      long result_order =
          std::min({sat_add(order_, -o.val_), sat_add(inv_order, val_), cap_order});
      return scaled(R::from_int(1) / o.c_[0]).shifted(-o.val_).truncated(result_order);
    }
    return *this * o.inverted(cap_order);
  }

  // Substitute inner into a power series (val(inner) >= 1, val(outer) >= 0),
  // Horner in the inner series; `cap_order` truncates intermediates.
  static LaurentSeries compose(const LaurentSeries& outer, const LaurentSeries& inner,
                               long cap_order = kExactOrder) {
    if (outer.val_ < 0 && !outer.c_.empty())
      fail(ErrorKind::InternalError, "compose: outer must be a power series");
    if (!inner.c_.empty() && inner.val_ < 1)
      fail(ErrorKind::InternalError, "compose: inner must have positive valuation");
    long iv = inner.c_.empty() ? 1 : inner.val_;
    long result_order = std::min(
        {inner.order_, sat_add(sat_add(outer.order_, 1) >= kExactOrder ? kExactOrder
                                                                       : (outer.order_ + 1) * iv,
                               -1),
         cap_order});
    if (result_order >= kExactOrder && !(outer.is_exact() && inner.is_exact()))
      result_order = std::min(inner.order_, cap_order);
    if (outer.c_.empty()) return zero_to(result_order);
    LaurentSeries acc = zero_to(kExactOrder);
    long top_e = outer.top();
    for (long e = top_e; e >= outer.val_; --e) {
      acc = acc * inner;
      acc = acc.truncated(result_order);
      const R& ce = outer.coeff(e);
      if (!ce.is_zero()) acc = acc + monomial(ce, 0);
    }
    // acc now equals sum c_e * inner^(e - val); multiply the remaining power.
    if (outer.val_ > 0) {
      LaurentSeries pw = one();
      for (long i = 0; i < outer.val_; ++i) pw = (pw * inner).truncated(result_order);
      acc = (acc * pw);
    }
    acc = acc.truncated(result_order);
    acc.order_ = result_order;
    acc.normalize();
    return acc;
  }

  // d/ds, exponentwise.
  LaurentSeries derivative() const {
    LaurentSeries s;
    s.order_ = sat_add(order_, -1);
    std::vector<R> out;
    long lo = 0;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      long e = val_ + static_cast<long>(i);
      if (e == 0) continue;
      R v = c_[i] * R::from_int(e);
      long ne = e - 1;
      if (first) {
        lo = ne;
        first = false;
      }
      while (static_cast<long>(out.size()) < ne - lo) out.push_back(R());
      out.push_back(std::move(v));
    }
    if (first) {
      s.val_ = s.order_ + 1;
      return s;
    }
    s.val_ = lo;
    s.c_ = std::move(out);
    s.normalize();
    return s;
  }

  // Termwise antiderivative with zero constant term; requires val >= 0.
  LaurentSeries integrated() const {
    if (!c_.empty() && val_ < 0)
      fail(ErrorKind::InternalError, "termwise integration needs a power series");
    LaurentSeries s;
    s.order_ = sat_add(order_, 1);
    if (c_.empty()) {
      s.val_ = s.order_ + 1;
      return s;
    }
    s.val_ = val_ + 1;
    s.c_.resize(c_.size(), R());
    for (size_t i = 0; i < c_.size(); ++i) {
      long e = val_ + static_cast<long>(i);
      if (!c_[i].is_zero()) s.c_[i] = c_[i] / R::from_int(e + 1);
    }
    s.normalize();
    return s;
  }

  bool operator==(const LaurentSeries& o) const {
    return val_ == o.val_ && order_ == o.order_ && c_ == o.c_;
  }
  bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

  // Agreement of all known coefficients up to `upto` (inclusive).
  bool agrees_with(const LaurentSeries& o, long upto) const {
    if (order_ < upto || o.order_ < upto) return false;
    long lo = std::min(val_, o.val_);
    for (long e = lo; e <= upto; ++e)
      if (!(get(e) == o.get(e))) return false;
    return true;
  }

  std::string to_string(const std::string& var = "s") const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      long e = val_ + static_cast<long>(i);
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i].to_string() << ")";
      if (e != 0) {
        os << "*" << var;
        if (e != 1) os << "^" << e;
      }
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(" << var << "^" << (order_ + 1) << ")";
    return os.str();
  }

 private:
  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      val_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) val_ = order_ + 1;
  }

  long top() const { return c_.empty() ? val_ - 1 : val_ + static_cast<long>(c_.size()) - 1; }

  const R& get(long e) const {
    static const R zero_elem = R();
    if (e < val_ || e >= val_ + static_cast<long>(c_.size())) return zero_elem;
    return c_[static_cast<size_t>(e - val_)];
  }

  long val_;
  long order_;
  std::vector<R> c_;
};

using FieldSeries = LaurentSeries<FieldElement>;
using RatFunSeries = LaurentSeries<RationalFunction>;

inline RatFunSeries promote_series(const FieldSeries& s) {
  std::vector<RationalFunction> c;
  c.reserve(s.span());
  for (long e = s.val(); e < s.val() + static_cast<long>(s.span()); ++e)
    c.push_back(RationalFunction::constant(s.coeff(e)));
  return RatFunSeries::from_coeffs(s.val(), std::move(c), s.order());
}

// Evaluate a polynomial under a partial assignment of variables to scalar
// series; unassigned variables stay symbolic inside the coefficients.
RatFunSeries eval_poly_at_series(const MultiPoly& p,
                                 const std::map<VarId, FieldSeries>& assign);
// Same, requiring every variable to be assigned.
FieldSeries eval_poly_at_series_full(const MultiPoly& p,
                                     const std::map<VarId, FieldSeries>& assign);

// Exact Laurent expansion of f under the assignment; unassigned variables
// appear inside the rational-function coefficients. cap_order bounds the
// result when the expansion would otherwise be an infinite exact object.
RatFunSeries substitute_series(const RationalFunction& f,
                               const std::map<VarId, FieldSeries>& assign,
                               long cap_order = kExactOrder);
// All-variables-assigned variant with scalar coefficients.
FieldSeries substitute_series_full(const RationalFunction& f,
                                   const std::map<VarId, FieldSeries>& assign,
                                   long cap_order = kExactOrder);

}  // namespace ramrec

#endif
