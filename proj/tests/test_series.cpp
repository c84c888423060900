#include "ramrec/series.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace ramrec;
using testutil::rand_series;

namespace {
FieldElement q(long a, long b = 1) { return FieldElement::from_rational(Rational(a, b)); }
FieldSeries S() { return FieldSeries::identity(); }
FieldSeries cs(long v, std::vector<long> nums, long order) {
  std::vector<FieldElement> c;
  for (long x : nums) c.push_back(q(x));
  return FieldSeries::from_coeffs(v, std::move(c), order);
}
}  // namespace

TEST_CASE("arithmetic basics") {
  FieldSeries inv_s = FieldSeries::monomial(q(1), -1);
  CHECK(inv_s * S() == FieldSeries::one());

  // 1/(1-s) = 1 + s + s^2 + ...
  FieldSeries one_minus_s = cs(0, {1, -1}, kExactOrder);
  FieldSeries geom = one_minus_s.inverted(10);
  for (long e = 0; e <= 10; ++e) CHECK(geom.coeff(e) == q(1));

  // (s + s^2) / (s^2 (1+s)) = 1/s exactly
  FieldSeries num = cs(1, {1, 1}, kExactOrder);
  FieldSeries den = cs(2, {1, 1}, kExactOrder);
  FieldSeries r = num.divided_by(den, 12);
  CHECK(r.val() == -1);
  CHECK(r.coeff(-1) == q(1));
  for (long e = 0; e <= r.order(); ++e) CHECK(r.coeff(e).is_zero());
}

TEST_CASE("residue") {
  CHECK(FieldSeries::monomial(q(1), -1).residue() == q(1));
  FieldSeries a = FieldSeries::monomial(q(1), -2) + FieldSeries::monomial(q(3), 0);
  CHECK(a.residue().is_zero());
  FieldSeries b = FieldSeries::monomial(q(2), -1) + FieldSeries::monomial(q(5), -3);
  CHECK(b.residue() == q(2));
  FieldSeries below = FieldSeries::zero_to(-2);
  CHECK_THROWS_AS(below.residue(), Error);
}

TEST_CASE("integrate and differentiate") {
  CHECK(FieldSeries::one().integrated() == S());
  FieldSeries two_s = FieldSeries::monomial(q(2), 1);
  CHECK(two_s.integrated() == S() * S());
  FieldSeries p = cs(0, {1, 2, 3}, 7);
  CHECK(p.integrated().derivative().agrees_with(p, 7));
  CHECK_THROWS_AS(FieldSeries::monomial(q(1), -1).integrated(), Error);
}

TEST_CASE("derivative kills residues") {
  for (int iter = 0; iter < 20; ++iter) {
    FieldSeries a = rand_series(-4, 9, 3);
    CHECK(a.derivative().residue().is_zero());
  }
}

TEST_CASE("compose") {
  FieldSeries inner = S() + S() * S();  // s + s^2, exact
  CHECK(FieldSeries::compose(inner, S()) == inner);
  // compose(s + s^2, s + s^2) = s + 2s^2 + 2s^3 + s^4
  FieldSeries twice = FieldSeries::compose(inner, inner);
  CHECK(twice == cs(1, {1, 2, 2, 1}, kExactOrder));
  // associativity on random power series samples
  for (int iter = 0; iter < 10; ++iter) {
    FieldSeries f = rand_series(0, 8);
    FieldSeries g = rand_series(1, 8);
    FieldSeries h = rand_series(1, 8);
    if (g.known_zero() || h.known_zero()) continue;
    FieldSeries lhs = FieldSeries::compose(FieldSeries::compose(f, g), h);
    FieldSeries rhs = FieldSeries::compose(f, FieldSeries::compose(g, h));
    long upto = std::min(lhs.order(), rhs.order());
    CHECK(lhs.agrees_with(rhs, upto));
  }
}

TEST_CASE("window bookkeeping is exact") {
  // Multiplying by a short-window series must shrink knowledge: the unknown
  // tail of b (from s^{-1}) meets the valuation of a (s^0) at s^{-1}.
  FieldSeries a = cs(0, {1, 1, 1, 1, 1, 1, 1, 1, 1}, 8);  // known to s^8
  FieldSeries b = cs(-3, {1}, -2);                        // s^{-3} known through s^{-2}
  FieldSeries p = a * b;
  CHECK(p.order() == -2);
  CHECK(p.coeff(-3) == q(1));
  CHECK(p.coeff(-2) == q(1));
  CHECK_THROWS_AS(p.coeff(-1), Error);
  CHECK_THROWS_AS(p.residue(), Error);
  // Dividing by a series that is zero to its window is an error.
  CHECK_THROWS_AS(a.divided_by(FieldSeries::zero_to(5)), Error);
}

TEST_CASE("substitute_series examples") {
  // f = 1/(p - q), q <- 1 + s gives sum_m s^m / (p-1)^{m+1}
  RationalFunction p = RationalFunction::variable(p_var(0));
  RationalFunction f = RationalFunction::one() / (p - RationalFunction::variable(p_var(1)));
  std::map<VarId, FieldSeries> assign{
      {p_var(1), cs(0, {1, 1}, kExactOrder)}};
  RatFunSeries out = substitute_series(f, assign, 6);
  RationalFunction pm1 = p - RationalFunction::from_int(1);
  for (long m = 0; m <= 6; ++m) CHECK(out.coeff(m) == pm1.pow(-(m + 1)));

  // f = 1/(q1 - q2)^2 with q1 <- s, q2 <- -s gives (1/4) s^{-2}
  RationalFunction q1 = RationalFunction::variable(p_var(1));
  RationalFunction q2 = RationalFunction::variable(p_var(2));
  RationalFunction g = (q1 - q2).pow(-2);
  std::map<VarId, FieldSeries> assign2{
      {p_var(1), S()},
      {p_var(2), -S()}};
  RatFunSeries out2 = substitute_series(g, assign2, 6);
  CHECK(out2.val() == -2);
  CHECK(out2.coeff(-2) == RationalFunction::constant(Rational(1, 4)));
  for (long e = -1; e <= out2.order(); ++e) CHECK(out2.coeff(e).is_zero());

  // full-substitution path returns scalar coefficients
  std::map<VarId, FieldSeries> assign3{
      {p_var(0), cs(0, {3, 1}, kExactOrder)},
      {p_var(1), cs(0, {1, 1}, kExactOrder)}};
  FieldSeries out3 = substitute_series_full(f, assign3, 6);
  // 1/((3+s)-(1+s)) = 1/2
  CHECK(out3.coeff(0) == q(1, 2));
  for (long e = 1; e <= 6; ++e) CHECK(out3.coeff(e).is_zero());
}

TEST_CASE("display form") {
  FieldSeries a = FieldSeries::monomial(q(-1, 2), -2) + FieldSeries::monomial(q(3), 1);
  CHECK(a.truncated(4).to_string() == "(-1/2)*s^-2 + (3)*s + O(s^5)");
  CHECK(FieldSeries::one().to_string() == "(1)");
}
