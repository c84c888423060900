#include "ramrec/ratfun.hpp"

#include <algorithm>

#include "json.hpp"
#include "ramrec/errors.hpp"

namespace ramrec {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly::one();
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      auto qn = divide_exact(num_, g);
      auto qd = divide_exact(den_, g);
      if (!qn || !qd) fail(ErrorKind::InternalError, "gcd does not divide");
      num_ = std::move(*qn);
      den_ = std::move(*qd);
    }
  }
  FieldElement lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    FieldElement inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::constant(const FieldElement& c) {
  RationalFunction r;
  r.num_ = MultiPoly::constant(c);
  return r;
}

RationalFunction RationalFunction::variable(VarId v) {
  RationalFunction r;
  r.num_ = MultiPoly::variable(v);
  return r;
}

RationalFunction RationalFunction::from_poly(MultiPoly p) {
  RationalFunction r;
  r.num_ = std::move(p);
  return r;
}

FieldElement RationalFunction::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InternalError, "constant_value on non-constant");
  if (num_.is_zero()) return FieldElement::zero();
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (is_constant() && o.is_constant())
    return constant(constant_value() + o.constant_value());
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)) with g = gcd(b, d).
  MultiPoly g = poly_gcd(den_, o.den_);
  if (g.is_constant()) return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  MultiPoly bq = *divide_exact(den_, g);
  MultiPoly dq = *divide_exact(o.den_, g);
  return RationalFunction(num_ * dq + o.num_ * bq, den_ * dq);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return zero();
  if (o.is_constant()) return scaled(o.constant_value());
  if (is_constant()) return o.scaled(constant_value());
  // Cross-cancel before multiplying to keep the gcds small.
  MultiPoly g1 = poly_gcd(num_, o.den_);
  MultiPoly g2 = poly_gcd(o.num_, den_);
  MultiPoly n1 = g1.is_constant() ? num_ : *divide_exact(num_, g1);
  MultiPoly d2 = g1.is_constant() ? o.den_ : *divide_exact(o.den_, g1);
  MultiPoly n2 = g2.is_constant() ? o.num_ : *divide_exact(o.num_, g2);
  MultiPoly d1 = g2.is_constant() ? den_ : *divide_exact(den_, g2);
  MultiPoly nn = n1 * n2;
  MultiPoly dd = d1 * d2;
  // Already coprime; just normalize the leading coefficient.
  RationalFunction r;
  FieldElement lc = dd.leading_coefficient();
  if (!lc.is_one()) {
    FieldElement inv = lc.inverse();
    nn = nn.scaled(inv);
    dd = dd.scaled(inv);
  }
  r.num_ = std::move(nn);
  r.den_ = std::move(dd);
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero rational function");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  FieldElement lc = r.den_.leading_coefficient();
  if (!lc.is_one()) {
    FieldElement inv = lc.inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational function division by zero");
  if (o.is_constant()) return scaled(o.constant_value().inverse());
  return *this * o.inverse();
}

RationalFunction RationalFunction::pow(long e) const {
  if (e == 0) return one();
  RationalFunction b = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  RationalFunction acc = one();
  while (n) {
    if (n & 1) acc = acc * b;
    b = b * b;
    n >>= 1;
  }
  return acc;
}

RationalFunction RationalFunction::scaled(const FieldElement& c) const {
  if (c.is_zero()) return zero();
  RationalFunction r = *this;
  r.num_ = r.num_.scaled(c);
  return r;
}

RationalFunction RationalFunction::derivative(VarId v) const {
  // (n/d)' = (n'd - nd')/d^2; canonicalization removes the spurious factor.
  MultiPoly dn = num_.derivative(v);
  MultiPoly dd = den_.derivative(v);
  if (dd.is_zero()) return RationalFunction(std::move(dn), den_);
  return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

RationalFunction RationalFunction::substituted(VarId v, const RationalFunction& value) const {
  auto eval_poly = [&](const MultiPoly& p) {
    std::vector<MultiPoly> cs = p.coefficients_in(v);
    // Horner in the substituted value.
    RationalFunction acc = zero();
    for (size_t i = cs.size(); i-- > 0;) acc = acc * value + from_poly(cs[i]);
    return acc;
  };
  RationalFunction dn = eval_poly(den_);
  if (dn.is_zero())
    fail(ErrorKind::DivisionByZero, "substitution makes the denominator vanish identically");
  return eval_poly(num_) / dn;
}

RationalFunction RationalFunction::renamed(const std::map<VarId, VarId>& mapping) const {
  RationalFunction r;
  r.num_ = num_.renamed(mapping);
  r.den_ = den_.renamed(mapping);
  // Renaming can change the grlex leading coefficient of the denominator.
  FieldElement lc = r.den_.leading_coefficient();
  if (!lc.is_one()) {
    FieldElement inv = lc.inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

bool RationalFunction::depends_on(VarId v) const {
  auto in = [&](const MultiPoly& p) {
    return std::find(p.vars().begin(), p.vars().end(), v) != p.vars().end();
  };
  return in(num_) || in(den_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  bool n_simple = num_.term_count() <= 1;
  bool d_simple = den_.term_count() <= 1;
  return (n_simple ? n : "(" + n + ")") + "/" + (d_simple ? d : "(" + d + ")");
}

namespace {

nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json expvec = nlohmann::json::array();
    for (unsigned e : it->first) expvec.push_back(e);
    terms.push_back(nlohmann::json::array({expvec, it->second.to_string()}));
  }
  return terms;
}

}  // namespace

std::string RationalFunction::to_json_string() const {
  nlohmann::json j;
  std::vector<VarId> u;
  std::set_union(num_.vars().begin(), num_.vars().end(), den_.vars().begin(),
                 den_.vars().end(), std::back_inserter(u));
  nlohmann::json vars = nlohmann::json::array();
  for (VarId v : u) vars.push_back(var_name(v));
  j["vars"] = vars;
  // Terms are emitted over the union variable list.
  auto over_union = [&](const MultiPoly& p) {
    if (p.vars() != u) {
      // Re-express with the union list by multiplying with 1 over those vars.
      MultiPoly::TermMap tm;
      std::vector<size_t> pos(p.vars().size());
      for (size_t i = 0; i < p.vars().size(); ++i)
        pos[i] = static_cast<size_t>(std::lower_bound(u.begin(), u.end(), p.vars()[i]) - u.begin());
      for (const auto& [e, c] : p.terms()) {
        ExpVec ne(u.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        tm.emplace(std::move(ne), c);
      }
      nlohmann::json terms = nlohmann::json::array();
      for (auto it = tm.rbegin(); it != tm.rend(); ++it) {
        nlohmann::json expvec = nlohmann::json::array();
        for (unsigned x : it->first) expvec.push_back(x);
        terms.push_back(nlohmann::json::array({expvec, it->second.to_string()}));
      }
      return terms;
    }
    return poly_to_json(p);
  };
  j["num"] = over_union(num_);
  j["den"] = over_union(den_);
  return j.dump();
}

}  // namespace ramrec
