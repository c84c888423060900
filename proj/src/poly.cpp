#include "ramrec/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ramrec/errors.hpp"

namespace ramrec {

std::string var_name(VarId v) {
  if (v == kVarT) return "t";
  return "p" + std::to_string(v - 1);
}

MultiPoly MultiPoly::make(std::vector<VarId> vars, TermMap terms) {
  MultiPoly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  if (terms_.empty()) {
    vars_.clear();
    return;
  }
  // Drop variables that no longer occur.
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  bool all = true;
  for (bool u : used) all = all && u;
  if (all) return;
  std::vector<VarId> nv;
  std::vector<size_t> keep;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) {
      nv.push_back(vars_[i]);
      keep.push_back(i);
    }
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    ExpVec ne(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
    nt.emplace(std::move(ne), c);
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

MultiPoly MultiPoly::constant(const FieldElement& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(ExpVec{}, c);
  return p;
}

MultiPoly MultiPoly::variable(VarId v) {
  MultiPoly p;
  p.vars_ = {v};
  p.terms_.emplace(ExpVec{1}, FieldElement::one());
  return p;
}

MultiPoly MultiPoly::monomial(const FieldElement& c, VarId v, unsigned e) {
  if (c.is_zero()) return zero();
  if (e == 0) return constant(c);
  MultiPoly p;
  p.vars_ = {v};
  p.terms_.emplace(ExpVec{e}, c);
  return p;
}

MultiPoly MultiPoly::from_univar(VarId v, const std::vector<FieldElement>& ascending) {
  MultiPoly p;
  p.vars_ = {v};
  for (size_t i = 0; i < ascending.size(); ++i)
    if (!ascending[i].is_zero()) p.terms_.emplace(ExpVec{static_cast<unsigned>(i)}, ascending[i]);
  p.normalize();
  return p;
}

FieldElement MultiPoly::constant_value() const {
  if (terms_.empty()) return FieldElement::zero();
  if (!is_constant()) fail(ErrorKind::InternalError, "constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

unsigned MultiPoly::degree(VarId v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

FieldElement MultiPoly::leading_coefficient() const {
  if (terms_.empty()) return FieldElement::zero();
  return terms_.rbegin()->second;
}

namespace {

// Re-express terms over a variable superset.
MultiPoly::TermMap remap_terms(const MultiPoly& p, const std::vector<VarId>& target) {
  std::vector<size_t> pos(p.vars().size());
  for (size_t i = 0; i < p.vars().size(); ++i) {
    auto it = std::lower_bound(target.begin(), target.end(), p.vars()[i]);
    pos[i] = static_cast<size_t>(it - target.begin());
  }
  MultiPoly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    ExpVec ne(target.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.emplace(std::move(ne), c);
  }
  return out;
}

std::vector<VarId> var_union(const std::vector<VarId>& a, const std::vector<VarId>& b) {
  std::vector<VarId> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

}  // namespace

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (vars_ == o.vars_) {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
      auto [it, fresh] = r.terms_.emplace(e, c);
      if (!fresh) it->second += c;
    }
    r.normalize();
    return r;
  }
  std::vector<VarId> u = var_union(vars_, o.vars_);
  TermMap ta = remap_terms(*this, u), tb = remap_terms(o, u);
  for (const auto& [e, c] : tb) {
    auto [it, fresh] = ta.emplace(e, c);
    if (!fresh) it->second += c;
  }
  return make(std::move(u), std::move(ta));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return zero();
  if (is_constant()) return o.scaled(constant_value());
  if (o.is_constant()) return scaled(o.constant_value());
  std::vector<VarId> u = var_union(vars_, o.vars_);
  TermMap ta = vars_ == u ? terms_ : remap_terms(*this, u);
  TermMap tb = o.vars_ == u ? o.terms_ : remap_terms(o, u);
  TermMap out;
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      ExpVec e(u.size());
      for (size_t i = 0; i < u.size(); ++i) e[i] = ea[i] + eb[i];
      FieldElement c = ca * cb;
      auto it = out.find(e);
      if (it == out.end())
        out.emplace(std::move(e), std::move(c));
      else
        it->second += c;
    }
  }
  return make(std::move(u), std::move(out));
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
  if (c.is_zero()) return zero();
  MultiPoly p = *this;
  for (auto& [e, v] : p.terms_) v *= c;
  p.normalize();
  return p;
}

MultiPoly MultiPoly::derivative(VarId v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return zero();
  size_t idx = static_cast<size_t>(it - vars_.begin());
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    ExpVec ne = e;
    FieldElement nc = c * FieldElement::from_int(static_cast<long>(e[idx]));
    ne[idx] -= 1;
    out.emplace(std::move(ne), std::move(nc));
  }
  return make(vars_, std::move(out));
}

MultiPoly MultiPoly::renamed(const std::map<VarId, VarId>& mapping) const {
  std::vector<VarId> nv(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = mapping.find(vars_[i]);
    nv[i] = it == mapping.end() ? vars_[i] : it->second;
  }
  std::vector<VarId> sorted = nv;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::InternalError, "rename collision");
  // Positions of old slots inside the sorted new list.
  std::vector<size_t> pos(nv.size());
  for (size_t i = 0; i < nv.size(); ++i)
    pos[i] = static_cast<size_t>(std::lower_bound(sorted.begin(), sorted.end(), nv[i]) - sorted.begin());
  TermMap out;
  for (const auto& [e, c] : terms_) {
    ExpVec ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.emplace(std::move(ne), c);
  }
  return make(std::move(sorted), std::move(out));
}

FieldElement MultiPoly::eval(const std::map<VarId, FieldElement>& point) const {
  FieldElement acc = FieldElement::zero();
  // Power cache per variable.
  std::vector<std::vector<FieldElement>> pows(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) fail(ErrorKind::InternalError, "eval missing variable");
    pows[i] = {FieldElement::one(), it->second};
  }
  for (const auto& [e, c] : terms_) {
    FieldElement term = c;
    for (size_t i = 0; i < e.size(); ++i) {
      unsigned k = e[i];
      auto& pv = pows[i];
      while (pv.size() <= k) pv.push_back(pv.back() * pv[1]);
      if (k) term *= pv[k];
    }
    acc += term;
  }
  return acc;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(VarId v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return {*this};
  size_t idx = static_cast<size_t>(it - vars_.begin());
  std::vector<VarId> rest = vars_;
  rest.erase(rest.begin() + static_cast<long>(idx));
  std::vector<TermMap> buckets(degree(v) + 1);
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    unsigned k = ne[idx];
    ne.erase(ne.begin() + static_cast<long>(idx));
    buckets[k].emplace(std::move(ne), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(make(rest, std::move(b)));
  return out;
}

MultiPoly MultiPoly::assemble_in(VarId v, const std::vector<MultiPoly>& coeffs) {
  MultiPoly acc = zero();
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (k == 0)
      acc = acc + coeffs[k];
    else
      acc = acc + coeffs[k] * monomial(FieldElement::one(), v, static_cast<unsigned>(k));
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending grlex.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const ExpVec& e = it->first;
    FieldElement c = it->second;
    bool is_const_term = true;
    for (unsigned x : e) is_const_term = is_const_term && (x == 0);
    std::string coeff_str;
    bool neg = false;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      if (q < 0) {
        neg = true;
        q = -q;
      }
      if (q != 1 || is_const_term) coeff_str = q.str();
    } else {
      coeff_str = "(" + c.to_string() + ")";
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool printed = false;
    if (!coeff_str.empty()) {
      os << coeff_str;
      printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << var_name(vars_[i]);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Exact division and gcd.

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (p.is_zero()) return MultiPoly::zero();
  if (o.is_constant()) return p.scaled(o.constant_value().inverse());
  std::vector<VarId> u = var_union(p.vars(), o.vars());
  MultiPoly::TermMap rem = remap_terms(p, u);
  MultiPoly::TermMap div = remap_terms(o, u);
  const ExpVec& dlead = div.rbegin()->first;
  const FieldElement dlc = div.rbegin()->second;
  MultiPoly::TermMap quot;
  while (!rem.empty()) {
    const ExpVec& rlead = rem.rbegin()->first;
    ExpVec q(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
      if (rlead[i] < dlead[i]) return std::nullopt;
      q[i] = rlead[i] - dlead[i];
    }
    FieldElement qc = rem.rbegin()->second / dlc;
    // rem -= qc * s^q * div
    for (const auto& [e, c] : div) {
      ExpVec ne(u.size());
      for (size_t i = 0; i < u.size(); ++i) ne[i] = e[i] + q[i];
      FieldElement delta = qc * c;
      auto [it, fresh] = rem.emplace(std::move(ne), -delta);
      if (!fresh) {
        it->second -= delta;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quot.emplace(std::move(q), std::move(qc));
  }
  return MultiPoly::make(std::move(u), std::move(quot));
}

namespace {

MultiPoly make_monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  FieldElement lc = p.leading_coefficient();
  if (lc.is_one()) return p;
  return p.scaled(lc.inverse());
}

// Univariate monic Euclid over the coefficient field.
MultiPoly gcd_univar(const MultiPoly& a, const MultiPoly& b, VarId v) {
  std::vector<MultiPoly> fa = a.coefficients_in(v);
  std::vector<MultiPoly> fb = b.coefficients_in(v);
  auto to_f = [](std::vector<MultiPoly>& cs) {
    std::vector<FieldElement> out(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) out[i] = cs[i].constant_value();
    return out;
  };
  std::vector<FieldElement> r0 = to_f(fa), r1 = to_f(fb);
  auto trim = [](std::vector<FieldElement>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(r0);
  trim(r1);
  if (r0.size() < r1.size()) std::swap(r0, r1);
  while (!r1.empty()) {
    // r0 mod r1, with monic normalization of the divisor first.
    FieldElement inv = r1.back().inverse();
    for (auto& c : r1) c *= inv;
    const size_t d1 = r1.size() - 1;
    while (r0.size() >= r1.size() && !r0.empty()) {
      FieldElement lead = r0.back();
      size_t shift = r0.size() - 1 - d1;
      if (!lead.is_zero())
        for (size_t i = 0; i + 1 <= d1 + 1; ++i) r0[shift + i] -= lead * r1[i];
      r0.pop_back();
      trim(r0);
    }
    std::swap(r0, r1);
  }
  return make_monic(MultiPoly::from_univar(v, r0));
}

// Strip the monomial content (componentwise min exponent) from p; the
// content is reported per variable id.
MultiPoly strip_monomial(const MultiPoly& p, std::map<VarId, unsigned>& content) {
  content.clear();
  if (p.is_zero()) return p;
  ExpVec mono;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      mono = e;
      first = false;
    } else {
      for (size_t i = 0; i < mono.size(); ++i) mono[i] = std::min(mono[i], e[i]);
    }
  }
  bool trivial = true;
  for (unsigned x : mono) trivial = trivial && (x == 0);
  if (trivial) return p;
  for (size_t i = 0; i < mono.size(); ++i)
    if (mono[i]) content.emplace(p.vars()[i], mono[i]);
  MultiPoly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    ExpVec ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = e[i] - mono[i];
    out.emplace(std::move(ne), c);
  }
  return MultiPoly::make(p.vars(), std::move(out));
}

MultiPoly gcd_inner(const MultiPoly& a, const MultiPoly& b);

// Content of p with respect to v: gcd of its v-coefficients.
MultiPoly content_in(const std::vector<MultiPoly>& coeffs) {
  MultiPoly g = MultiPoly::zero();
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd_inner(g, c);
    if (g.is_constant()) return MultiPoly::one();
  }
  return g.is_zero() ? MultiPoly::one() : g;
}

std::vector<MultiPoly> divide_coeffs(const std::vector<MultiPoly>& coeffs, const MultiPoly& d) {
  std::vector<MultiPoly> out(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    auto q = divide_exact(coeffs[i], d);
    if (!q) fail(ErrorKind::InternalError, "content division failed");
    out[i] = std::move(*q);
  }
  return out;
}

void trim_poly_vec(std::vector<MultiPoly>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Pseudo-remainder of dense coefficient vectors in the main variable:
// returns lc(B)^(degA - degB + 1) * A mod B.
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> A, const std::vector<MultiPoly>& B) {
  const size_t db = B.size() - 1;
  const MultiPoly& lb = B.back();
  long steps_needed = static_cast<long>(A.size()) - static_cast<long>(B.size()) + 1;
  long steps = 0;
  while (A.size() >= B.size() && !A.empty()) {
    MultiPoly la = A.back();
    size_t shift = A.size() - 1 - db;
    // A = lb*A - la * x^shift * B
    for (auto& c : A) c = c * lb;
    for (size_t i = 0; i <= db; ++i) A[shift + i] = A[shift + i] - la * B[i];
    ++steps;
    A.pop_back();
    trim_poly_vec(A);
  }
  // Scale so the total factor is exactly lb^(degA-degB+1).
  for (; steps < steps_needed; ++steps)
    for (auto& c : A) c = c * lb;
  return A;
}

std::vector<MultiPoly> divide_vec(std::vector<MultiPoly> A, const MultiPoly& d) {
  for (auto& c : A) {
    if (c.is_zero()) continue;
    auto q = divide_exact(c, d);
    if (!q) fail(ErrorKind::InternalError, "subresultant division failed");
    c = std::move(*q);
  }
  return A;
}

MultiPoly pow_poly(const MultiPoly& p, unsigned e) {
  MultiPoly acc = MultiPoly::one();
  for (unsigned i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

// Subresultant PRS in the main variable v for primitive inputs.
MultiPoly gcd_prs(std::vector<MultiPoly> A, std::vector<MultiPoly> B, VarId v) {
  if (A.size() < B.size()) std::swap(A, B);
  MultiPoly g = MultiPoly::one(), h = MultiPoly::one();
  while (true) {
    long delta = static_cast<long>(A.size()) - static_cast<long>(B.size());
    std::vector<MultiPoly> R = pseudo_rem(A, B);
    if (R.empty()) break;
    if (R.size() == 1 && !R[0].is_zero()) {
      // Nonzero constant in v: the primitive parts are coprime in v.
      return MultiPoly::one();
    }
    MultiPoly denom = g * pow_poly(h, static_cast<unsigned>(delta));
    std::vector<MultiPoly> Bn = divide_vec(std::move(R), denom);
    A = std::move(B);
    B = std::move(Bn);
    g = A.back();
    if (delta >= 1) {
      MultiPoly gn = pow_poly(g, static_cast<unsigned>(delta));
      if (delta == 1)
        h = gn;
      else {
        auto q = divide_exact(gn, pow_poly(h, static_cast<unsigned>(delta - 1)));
        if (!q) fail(ErrorKind::InternalError, "subresultant h-update failed");
        h = std::move(*q);
      }
    }
  }
  // B is the gcd up to content in v: take its primitive part.
  MultiPoly cont = content_in(B);
  MultiPoly pp = MultiPoly::zero();
  {
    std::vector<MultiPoly> ppv = divide_coeffs(B, cont);
    // assemble back
    std::vector<MultiPoly> full = std::move(ppv);
    MultiPoly acc = MultiPoly::zero();
    for (size_t k = 0; k < full.size(); ++k) {
      if (full[k].is_zero()) continue;
      acc = acc + full[k] * MultiPoly::monomial(FieldElement::one(), v, static_cast<unsigned>(k));
    }
    pp = std::move(acc);
  }
  return pp;
}

MultiPoly gcd_inner(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::one();
  if (a == b) return make_monic(a);

  std::map<VarId, unsigned> ma, mb;
  MultiPoly pa = strip_monomial(a, ma);
  MultiPoly pb = strip_monomial(b, mb);
  // Common monomial factor.
  MultiPoly mono = MultiPoly::one();
  for (const auto& [v, ea] : ma) {
    auto it = mb.find(v);
    if (it == mb.end()) continue;
    unsigned e = std::min(ea, it->second);
    if (e) mono = mono * MultiPoly::monomial(FieldElement::one(), v, e);
  }
  if (pa.is_constant() || pb.is_constant()) return make_monic(mono);

  // Main variable: first shared variable; if none is shared the gcd is the
  // monomial part only.
  VarId v = -1;
  for (VarId cand : pa.vars()) {
    if (std::find(pb.vars().begin(), pb.vars().end(), cand) != pb.vars().end()) {
      v = cand;
      break;
    }
  }
  if (v < 0) return make_monic(mono);

  if (pa.vars().size() == 1 && pb.vars().size() == 1)
    return make_monic(mono * gcd_univar(pa, pb, v));

  std::vector<MultiPoly> ca = pa.coefficients_in(v);
  std::vector<MultiPoly> cb = pb.coefficients_in(v);
  MultiPoly conta = content_in(ca);
  MultiPoly contb = content_in(cb);
  MultiPoly gamma = gcd_inner(conta, contb);
  std::vector<MultiPoly> ppa = divide_coeffs(ca, conta);
  std::vector<MultiPoly> ppb = divide_coeffs(cb, contb);
  MultiPoly core = gcd_prs(std::move(ppa), std::move(ppb), v);
  return make_monic(mono * gamma * core);
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_inner(a, b); }

// ---------------------------------------------------------------------------
// Univariate root extraction.

RootReport rational_roots(const MultiPoly& p, unsigned conductor) {
  if (p.is_zero()) fail(ErrorKind::InternalError, "roots of zero polynomial");
  if (p.vars().size() > 1) fail(ErrorKind::InternalError, "rational_roots needs univariate input");
  RootReport rep;
  if (p.is_constant()) {
    rep.remainder = MultiPoly::one();
    return rep;
  }
  VarId v = p.vars()[0];
  std::vector<MultiPoly> cs = p.coefficients_in(v);
  std::vector<FieldElement> c(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) c[i] = cs[i].constant_value();

  // Root 0 with multiplicity = trailing zero count.
  size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  if (low > 0) {
    rep.roots.emplace_back(FieldElement::zero(), static_cast<int>(low));
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
  }
  if (c.size() <= 1) {
    rep.remainder = MultiPoly::one();
    return rep;
  }

  // Divisor candidates require rational extreme coefficients; cyclotomic
  // input would only arise from an engine bug.
  std::vector<Rational> rc(c.size());
  bool all_rational = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_rational()) {
      all_rational = false;
      break;
    }
    rc[i] = c[i].rational_value();
  }

  std::vector<Rational> candidates;
  if (all_rational) {
    // Clear denominators to integers.
    Integer scale = 1;
    for (const auto& q : rc) scale = scale / gcd(scale, denominator(q)) * denominator(q);
    Integer trail = numerator(rc.front()) * (scale / denominator(rc.front()));
    Integer lead = numerator(rc.back()) * (scale / denominator(rc.back()));
    for (const Integer& a : positive_divisors(trail))
      for (const Integer& b : positive_divisors(lead)) {
        Rational r(a, b);
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }

  auto eval_at = [&](const std::vector<FieldElement>& poly, const FieldElement& x) {
    FieldElement acc = FieldElement::zero();
    for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
  };
  auto deflate = [&](std::vector<FieldElement>& poly, const FieldElement& root) {
    // Synthetic division by (v - root); remainder checked zero by caller's test.
    std::vector<FieldElement> q(poly.size() - 1);
    FieldElement carry = FieldElement::zero();
    for (size_t i = poly.size(); i-- > 1;) {
      carry = poly[i] + carry * root;
      q[i - 1] = carry;
    }
    poly = std::move(q);
  };

  for (const Rational& r : candidates) {
    if (c.size() <= 1) break;
    for (unsigned j = 0; j < std::max(conductor, 1u); ++j) {
      if (c.size() <= 1) break;
      FieldElement root = FieldElement::from_rational(r);
      if (j > 0) {
        if (conductor <= 2) break;  // only +-r, already covered by the sign
        root = root * FieldElement::root_of_unity(conductor, static_cast<long>(j));
        if (root.is_rational()) continue;  // already covered as a rational candidate
      }
      int mult = 0;
      while (c.size() > 1 && eval_at(c, root).is_zero()) {
        deflate(c, root);
        ++mult;
      }
      if (mult) rep.roots.emplace_back(root, mult);
    }
  }

  rep.remainder_degree = static_cast<int>(c.size()) - 1;
  rep.remainder = MultiPoly::from_univar(v, c);
  std::sort(rep.roots.begin(), rep.roots.end(), [](const auto& x, const auto& y) {
    return x.first.cmp(y.first) < 0;
  });
  return rep;
}

int vanishing_order(const MultiPoly& p, const FieldElement& a) {
  if (p.is_zero()) fail(ErrorKind::InternalError, "vanishing order of zero polynomial");
  if (p.is_constant()) return 0;
  if (p.vars().size() > 1)
    fail(ErrorKind::InternalError, "vanishing_order needs univariate input");
  VarId v = p.vars()[0];
  std::vector<MultiPoly> cs = p.coefficients_in(v);
  std::vector<FieldElement> c(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) c[i] = cs[i].constant_value();
  auto eval_at = [&](const std::vector<FieldElement>& poly) {
    FieldElement acc = FieldElement::zero();
    for (size_t i = poly.size(); i-- > 0;) acc = acc * a + poly[i];
    return acc;
  };
  int ord = 0;
  while (c.size() > 1 && eval_at(c).is_zero()) {
    std::vector<FieldElement> q(c.size() - 1);
    FieldElement carry = FieldElement::zero();
    for (size_t i = c.size(); i-- > 1;) {
      carry = c[i] + carry * a;
      q[i - 1] = carry;
    }
    c = std::move(q);
    ++ord;
  }
  return ord;
}

}  // namespace ramrec
