#include "ramrec/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ramrec {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(ErrorKind::ParseError, "empty rational literal");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
  }
}

std::vector<Integer> positive_divisors(const Integer& n) {
  Integer a = abs(n);
  if (a == 0) fail(ErrorKind::InternalError, "divisors of zero");
  // Factor by trial division; curve coefficients are small by construction.
  std::vector<std::pair<Integer, int>> fac;
  Integer rem = a;
  long from = 2;
  const long limit = 1000000;
  for (Integer p = from; p * p <= rem && p <= limit; ++p) {
    if (rem % p == 0) {
      int e = 0;
      while (rem % p == 0) {
        rem /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (rem > 1) fac.emplace_back(rem, 1);  // prime or large cofactor
  std::vector<Integer> divs{Integer(1)};
  for (auto& [p, e] : fac) {
    size_t base = divs.size();
    Integer pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
    if (divs.size() > 100000)
      fail(ErrorKind::ValidationError, "coefficient too composite for root search");
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Ascending-power dense polynomial helpers over Rational (local to this file).
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by monic b, remainder must vanish.
Poly poly_div_monic(Poly a, const Poly& b) {
  poly_trim(a);
  const size_t db = b.size() - 1;
  if (a.size() <= db) {
    if (!a.empty()) fail(ErrorKind::InternalError, "inexact cyclotomic division");
    return {};
  }
  Poly q(a.size() - db, Rational(0));
  while (a.size() > db) {
    Rational lead = a.back();
    size_t shift = a.size() - 1 - db;
    q[shift] = lead;
    for (size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    poly_trim(a);
    if (a.size() <= db) break;
  }
  if (!a.empty()) fail(ErrorKind::InternalError, "inexact cyclotomic division");
  return q;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d.
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) num = poly_div_monic(std::move(num), cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

FieldElement FieldElement::root_of_unity(unsigned n, long j) {
  if (n < 1) fail(ErrorKind::ValidationError, "conductor must be >= 1");
  long jm = ((j % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
  std::vector<Rational> raw(n, Rational(0));
  raw[static_cast<size_t>(jm)] = 1;
  FieldElement e(n, std::vector<Rational>(euler_phi(n), Rational(0)));
  e.reduce_tail(raw);
  e.coeffs_.assign(raw.begin(), raw.end());
  e.coeffs_.resize(euler_phi(n), Rational(0));
  return e;
}

void FieldElement::reduce_tail(std::vector<Rational>& raw) const {
  // Reduce a degree-< 2*phi (or < N) polynomial in z mod Phi_N, in place;
  // afterwards raw has size phi(N) semantics (higher entries zeroed).
  const Poly& phi = cyclotomic_polynomial(conductor_);
  const size_t d = phi.size() - 1;  // = euler_phi(conductor_)
  for (size_t i = raw.size(); i-- > d;) {
    Rational lead = raw[i];
    if (lead == 0) continue;
    raw[i] = 0;
    for (size_t kk = 0; kk < d; ++kk) raw[i - d + kk] -= lead * phi[kk];
  }
  raw.resize(d);
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) fail(ErrorKind::InternalError, "field element is not rational: " + to_string());
  return coeffs_[0];
}

FieldElement FieldElement::embedded(unsigned m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0)
    fail(ErrorKind::InternalError, "embedding requires divisibility of conductors");
  unsigned stride = m / conductor_;
  std::vector<Rational> raw(static_cast<size_t>(coeffs_.size() - 1) * stride + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * stride] = coeffs_[i];
  FieldElement e(m, std::vector<Rational>(euler_phi(m), Rational(0)));
  e.reduce_tail(raw);
  e.coeffs_ = std::move(raw);
  e.coeffs_.resize(euler_phi(m), Rational(0));
  return e;
}

namespace {
inline unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }
}  // namespace

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (conductor_ == o.conductor_) {
    FieldElement r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }
  unsigned m = lcm_u(conductor_, o.conductor_);
  return embedded(m) + o.embedded(m);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  if (conductor_ == o.conductor_) {
    FieldElement r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
  }
  unsigned m = lcm_u(conductor_, o.conductor_);
  return embedded(m) - o.embedded(m);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (conductor_ != o.conductor_) {
    unsigned m = lcm_u(conductor_, o.conductor_);
    return embedded(m) * o.embedded(m);
  }
  const size_t d = coeffs_.size();
  if (d == 1) {
    FieldElement r = *this;
    r.coeffs_[0] *= o.coeffs_[0];
    return r;
  }
  std::vector<Rational> raw(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (o.coeffs_[j] == 0) continue;
      raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  FieldElement r(conductor_, std::vector<Rational>());
  r.reduce_tail(raw);
  r.coeffs_ = std::move(raw);
  r.coeffs_.resize(d, Rational(0));
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero field element");
  if (coeffs_.size() == 1) {
    FieldElement r = *this;
    r.coeffs_[0] = Rational(1) / r.coeffs_[0];
    return r;
  }
  // Extended Euclid in Q[z]: u*f + v*Phi_N = 1, so u = f^{-1} mod Phi_N.
  Poly r0 = cyclotomic_polynomial(conductor_);
  Poly r1(coeffs_.begin(), coeffs_.end());
  poly_trim(r1);
  Poly s0{}, s1{Rational(1)};  // coefficients of f in the Bezout combination
  while (!r1.empty()) {
    // Divide r0 by r1 (r1 not necessarily monic).
    Poly q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
    Poly rem = r0;
    const size_t d1 = r1.size() - 1;
    const Rational lead1 = r1.back();
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / lead1;
      size_t shift = rem.size() - 1 - d1;
      q[shift] = c;
      for (size_t i = 0; i <= d1; ++i) rem[shift + i] -= c * r1[i];
      poly_trim(rem);
      if (rem.empty()) break;
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    Poly qs(q.size() + (s1.empty() ? 0 : s1.size() - 1) + 1, Rational(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    poly_trim(qs);
    Poly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant since Phi_N is irreducible), s0 its cofactor.
  if (r0.size() != 1)
    fail(ErrorKind::InternalError, "cyclotomic inverse: unexpected gcd degree");
  Rational unit = r0[0];
  std::vector<Rational> raw = s0;
  for (auto& c : raw) c /= unit;
  raw.resize(std::max<size_t>(raw.size(), coeffs_.size()), Rational(0));
  FieldElement r(conductor_, std::vector<Rational>());
  r.reduce_tail(raw);
  r.coeffs_ = std::move(raw);
  r.coeffs_.resize(coeffs_.size(), Rational(0));
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "field division by zero");
  if (o.is_rational()) {
    // Common case: scaling by a rational needs no Euclid.
    FieldElement r = *this;
    const Rational& q = o.coeffs_[0];
    for (auto& c : r.coeffs_) c /= q;
    if (conductor_ != o.conductor_) return r;  // value independent of o's conductor
    return r;
  }
  return *this * o.inverse();
}

FieldElement FieldElement::pow(long e) const {
  if (e == 0) return one();
  FieldElement b = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement acc = one();
  while (n) {
    if (n & 1) acc = acc * b;
    b = b * b;
    n >>= 1;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  unsigned m = lcm_u(conductor_, o.conductor_);
  return embedded(m).coeffs_ == o.embedded(m).coeffs_;
}

int FieldElement::cmp(const FieldElement& o) const {
  unsigned m = lcm_u(conductor_, o.conductor_);
  const auto a = embedded(m), b = o.embedded(m);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return -1;
    if (a.coeffs_[i] > b.coeffs_[i]) return 1;
  }
  return 0;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return coeffs_[0].str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

FieldElement FieldElement::parse(const std::string& text, unsigned conductor) {
  // Sum of terms c, c*z^k, z^k with optional signs; whitespace insensitive.
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(ErrorKind::ParseError, "empty field element");
  std::vector<Rational> raw(std::max(conductor, 1u), Rational(0));
  size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) fail(ErrorKind::ParseError, "dangling sign in field element");
    Rational coeff(1);
    bool saw_num = false;
    size_t start = i;
    while (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i > start) {
      coeff = parse_rational(s.substr(start, i - start));
      saw_num = true;
    }
    long expo = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'z')) {
      if (s[i] == '*') ++i;
      if (i >= s.size() || s[i] != 'z')
        fail(ErrorKind::ParseError, "expected z in field element");
      ++i;
      expo = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t es = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es) fail(ErrorKind::ParseError, "expected exponent in field element");
        expo = std::stol(s.substr(es, i - es));
      }
    } else if (!saw_num) {
      fail(ErrorKind::ParseError, "expected term in field element");
    }
    if (expo >= static_cast<long>(raw.size())) raw.resize(expo + 1, Rational(0));
    raw[static_cast<size_t>(expo)] += sign < 0 ? -coeff : coeff;
    any = true;
  }
  if (!any) fail(ErrorKind::ParseError, "empty field element");
  FieldElement e(conductor, std::vector<Rational>(euler_phi(conductor), Rational(0)));
  e.reduce_tail(raw);
  e.coeffs_ = std::move(raw);
  e.coeffs_.resize(euler_phi(conductor), Rational(0));
  return e;
}

}  // namespace ramrec
