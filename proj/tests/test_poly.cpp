#include "ramrec/poly.hpp"

#include "doctest.h"
#include "ramrec/ratfun.hpp"
#include "test_util.hpp"

using namespace ramrec;
using testutil::rand_int;
using testutil::rand_poly;
using testutil::rand_ratfun;

namespace {
RationalFunction T() { return RationalFunction::variable(kVarT); }
RationalFunction P(int i) { return RationalFunction::variable(p_var(i)); }
RationalFunction C(long a, long b = 1) { return RationalFunction::constant(Rational(a, b)); }
}  // namespace

TEST_CASE("rational function canonical forms") {
  RationalFunction p = P(0);
  CHECK(p / (p - C(1)) - p / (p - C(1)) == RationalFunction::zero());
  CHECK((p * p - C(1)) / (p - C(1)) == p + C(1));
  CHECK(C(1) / (p - C(1)) + C(1) / (p + C(1)) == C(2) * p / (p * p - C(1)));
}

TEST_CASE("denominator normalization") {
  // 1/(2p - 2) must normalize the denominator to leading coefficient 1.
  RationalFunction f = C(1) / (C(2) * P(0) - C(2));
  CHECK(f.den().leading_coefficient().is_one());
  CHECK(f == C(1, 2) / (P(0) - C(1)));
}

TEST_CASE("derivative") {
  RationalFunction x = T() + C(1) / T();
  RationalFunction dx = x.derivative(kVarT);
  CHECK(dx == (T() * T() - C(1)) / (T() * T()));
  RationalFunction y = C(1, 3) * T().pow(3);
  CHECK(y.derivative(kVarT) == T() * T());
  CHECK(C(5, 7).derivative(kVarT).is_zero());
}

TEST_CASE("derivative satisfies the Leibniz rule") {
  for (int iter = 0; iter < 15; ++iter) {
    RationalFunction f = rand_ratfun({kVarT}, 3, 3);
    RationalFunction g = rand_ratfun({kVarT}, 3, 3);
    RationalFunction lhs = (f * g).derivative(kVarT);
    RationalFunction rhs = f.derivative(kVarT) * g + f * g.derivative(kVarT);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("canonical soundness: equality iff cross multiplication") {
  for (int iter = 0; iter < 25; ++iter) {
    RationalFunction a = rand_ratfun({kVarT, p_var(0)}, 2, 3);
    RationalFunction b = rand_ratfun({kVarT, p_var(0)}, 2, 3);
    bool eq_canonical = a == b;
    bool eq_cross = (a.num() * b.den()) == (b.num() * a.den());
    CHECK(eq_canonical == eq_cross);
    CHECK(a - a == RationalFunction::zero());
  }
}

TEST_CASE("gcd and exact division") {
  MultiPoly t = MultiPoly::variable(kVarT);
  MultiPoly one = MultiPoly::one();
  MultiPoly a = (t - one) * (t + one) * (t + one);
  MultiPoly b = (t + one) * t;
  MultiPoly g = poly_gcd(a, b);
  CHECK(g == t + one);
  auto q = divide_exact(a, g);
  REQUIRE(q.has_value());
  CHECK(*q == (t - one) * (t + one));
  CHECK(!divide_exact(b, t - one).has_value());
  for (int iter = 0; iter < 12; ++iter) {
    MultiPoly f1 = rand_poly({kVarT, p_var(0)}, 2, 3);
    MultiPoly f2 = rand_poly({kVarT, p_var(0)}, 2, 3);
    MultiPoly f3 = rand_poly({p_var(0)}, 2, 2);
    if (f1.is_zero() || f2.is_zero() || f3.is_zero()) continue;
    MultiPoly gg = poly_gcd(f1 * f3, f2 * f3);
    auto q1 = divide_exact(f1 * f3, gg);
    auto q2 = divide_exact(f2 * f3, gg);
    REQUIRE(q1.has_value());
    REQUIRE(q2.has_value());
    // gg is a common divisor containing f3.
    CHECK(divide_exact(gg, poly_gcd(gg, f3)).has_value());
    CHECK(poly_gcd(f3, gg).total_degree() == f3.total_degree());
  }
}

TEST_CASE("rational_roots on the curve-analysis shapes") {
  MultiPoly t = MultiPoly::variable(kVarT);
  MultiPoly one = MultiPoly::one();

  // t^2 (5t + 4)
  MultiPoly p1 = t * t * (MultiPoly::constant(Rational(5)) * t + MultiPoly::constant(Rational(4)));
  RootReport r1 = rational_roots(p1, 4);
  REQUIRE(r1.roots.size() == 2);
  CHECK(r1.remainder_degree == 0);
  CHECK(r1.roots[0].first == FieldElement::from_rational(Rational(-4, 5)));
  CHECK(r1.roots[0].second == 1);
  CHECK(r1.roots[1].first == FieldElement::zero());
  CHECK(r1.roots[1].second == 2);

  // t^2 - 1
  RootReport r2 = rational_roots(t * t - one, 2);
  REQUIRE(r2.roots.size() == 2);
  CHECK(r2.remainder_degree == 0);
  CHECK(r2.roots[0].first == FieldElement::from_rational(Rational(-1)));
  CHECK(r2.roots[1].first == FieldElement::from_rational(Rational(1)));

  // t^2 - 2 stays unfactored
  RootReport r3 = rational_roots(t * t - one - one, 12);
  CHECK(r3.roots.empty());
  CHECK(r3.remainder_degree == 2);

  // roots of the form r * zeta: t^3 + 1 over conductor 6
  MultiPoly p4 = t * t * t + one;
  RootReport r4 = rational_roots(p4, 6);
  CHECK(r4.remainder_degree == 0);
  REQUIRE(r4.roots.size() == 3);
  int nonrational = 0;
  for (auto& [root, mult] : r4.roots) {
    CHECK(mult == 1);
    if (!root.is_rational()) ++nonrational;
  }
  CHECK(nonrational == 2);
}

TEST_CASE("vanishing order") {
  MultiPoly t = MultiPoly::variable(kVarT);
  MultiPoly one = MultiPoly::one();
  MultiPoly p = (t - one) * (t - one) * (t + one);
  CHECK(vanishing_order(p, FieldElement::one()) == 2);
  CHECK(vanishing_order(p, FieldElement::from_rational(Rational(-1))) == 1);
  CHECK(vanishing_order(p, FieldElement::from_rational(Rational(2))) == 0);
}

TEST_CASE("rename and substitute") {
  RationalFunction f = C(1) / (P(0) - P(1)) + P(2);
  RationalFunction g = f.renamed({{p_var(0), p_var(3)}, {p_var(1), p_var(0)}});
  CHECK(g == C(1) / (P(3) - P(0)) + P(2));
  // swap is a valid simultaneous rename
  RationalFunction h = (P(0) - C(2) * P(1));
  CHECK(h.renamed({{p_var(0), p_var(1)}, {p_var(1), p_var(0)}}) == (P(1) - C(2) * P(0)));

  // chart flip: x(1/t) for x = t^2/(t^2+1) is 1/(1+t^2)
  RationalFunction x = T() * T() / (T() * T() + C(1));
  RationalFunction flipped = x.substituted(kVarT, C(1) / T());
  CHECK(flipped == C(1) / (T() * T() + C(1)));
}

TEST_CASE("to_string shapes") {
  CHECK((P(0) + C(1)).to_string() == "p0 + 1");
  CHECK((C(1) / (P(0) - C(1))).to_string() == "1/(p0 - 1)");
  CHECK((-P(0)).to_string() == "-p0");
  CHECK(RationalFunction::zero().to_string() == "0");
  CHECK((C(2) * P(0) * P(1)).to_string() == "2*p0*p1");
}
