#include "ramrec/curve.hpp"

#include "doctest.h"
#include "ramrec/expr.hpp"
#include "test_util.hpp"

using namespace ramrec;

namespace {
SpectralCurve curve_of(const std::string& x, const std::string& y) {
  SpectralCurve c;
  c.x = parse_curve_function(x);
  c.y = parse_curve_function(y);
  return c;
}
FieldElement q(long a, long b = 1) { return FieldElement::from_rational(Rational(a, b)); }
}  // namespace

TEST_CASE("ramification of x = t + 1/t") {
  CurveAnalysis A = analyze_curve(curve_of("t + 1/t", "(1/3)*t^3"), 2, 1);
  REQUIRE(A.points.size() == 2);
  CHECK(A.points[0].location == q(-1));
  CHECK(A.points[0].index == 2);
  CHECK(A.points[1].location == q(1));
  CHECK(A.points[1].index == 2);
  CHECK(A.conductor == 2);
  // poles of x (t = 0 and infinity) are simple, so nothing is excluded
  CHECK(A.warnings.empty());
}

TEST_CASE("ramification of x = t^5 + t^4") {
  CurveAnalysis A = analyze_curve(curve_of("t^5 + t^4", "t + 1/t"), 2, 1);
  REQUIRE(A.points.size() == 2);
  CHECK(A.points[0].location == q(-4, 5));
  CHECK(A.points[0].index == 2);
  CHECK(A.points[1].location == q(0));
  CHECK(A.points[1].index == 4);
  CHECK(A.conductor == 4);
  // x has a pole of order 5 at infinity: excluded locus, with a warning
  REQUIRE(A.warnings.size() == 1);
  CHECK(A.warnings[0].find("inf") != std::string::npos);
}

TEST_CASE("ramification of x = (1/5) t^5, pole at infinity excluded") {
  CurveAnalysis A = analyze_curve(curve_of("(1/5)*t^5", "t + 1/t"), 2, 1);
  REQUIRE(A.points.size() == 1);
  CHECK(A.points[0].location == q(0));
  CHECK(A.points[0].index == 5);
  CHECK(A.conductor == 5);
}

TEST_CASE("ramification point at infinity is admitted in the flipped chart") {
  // x = t^2/(t^2+1): dx = 2t/(t^2+1)^2 vanishes at t = 0 and at u = 0.
  CurveAnalysis A = analyze_curve(curve_of("t^2/(t^2 + 1)", "t"), 2, 1);
  REQUIRE(A.points.size() == 2);
  CHECK(!A.points[0].at_infinity);
  CHECK(A.points[0].location == q(0));
  CHECK(A.points[0].index == 2);
  CHECK(A.points[1].at_infinity);
  CHECK(A.points[1].index == 2);
  CHECK(A.points[1].label() == "inf");
  // y = t has a simple pole at infinity; phi = y dx stays regular.
  CHECK(A.points[1].phi.val() >= 1);
}

TEST_CASE("error paths") {
  CHECK_THROWS_WITH_AS(analyze_curve(curve_of("t + 1/t", "(t-1)^2"), 2, 1),
                       doctest::Contains("CoincidentRamification"), Error);
  CHECK_THROWS_WITH_AS(analyze_curve(curve_of("t", "t^2"), 2, 1),
                       doctest::Contains("NoRamification"), Error);
  // zeros of dx outside Q union rational multiples of session roots of unity
  CHECK_THROWS_WITH_AS(analyze_curve(curve_of("(1/4)*t^4 + t", "t"), 2, 1),
                       doctest::Contains("UnsupportedAlgebraicLocus"), Error);
  // y with a double pole on a ramification point
  CHECK_THROWS_WITH_AS(analyze_curve(curve_of("t + 1/t", "1/(t-1)^2"), 2, 1),
                       doctest::Contains("CoincidentRamification"), Error);
  // constant x
  CHECK_THROWS_WITH_AS(analyze_curve(curve_of("5", "t"), 2, 1),
                       doctest::Contains("ValidationError"), Error);
  // base point on a ramification point
  SpectralCurve c = curve_of("t + 1/t", "t");
  c.base_point = Rational(1);
  CHECK_THROWS_WITH_AS(analyze_curve(c, 2, 1), doctest::Contains("ValidationError"), Error);
}

TEST_CASE("y with a simple pole at the ramification point is admitted") {
  CurveAnalysis A = analyze_curve(curve_of("(1/3)*t^3", "t + 1/t"), 2, 1);
  REQUIRE(A.points.size() == 1);
  CHECK(A.points[0].index == 3);
  CHECK(A.conductor == 3);
  CHECK(A.points[0].y_loc.val() == -1);
  // y dx = (t + 1/t) t^2 dt = (t^3 + t) dt: phi = t^4/4 + t^2/2
  const FieldSeries& phi = A.points[0].phi;
  CHECK(phi.coeff(2) == q(1, 2));
  CHECK(phi.coeff(3).is_zero());
  CHECK(phi.coeff(4) == q(1, 4));
}

TEST_CASE("deck series for x = t + 1/t at a = 1: theta = 1/t") {
  CurveAnalysis A = analyze_curve(curve_of("t + 1/t", "(1/3)*t^3"), 3, 1);
  const RamPoint& pt = A.points[1];  // a = +1
  REQUIRE(pt.decks.size() == 1);
  const FieldSeries& d = pt.decks[0];
  // theta(1+s) - 1 = 1/(1+s) - 1 = -s + s^2 - s^3 + ...
  for (long m = 1; m <= 10; ++m)
    CHECK(d.coeff(m) == (m % 2 ? q(-1) : q(1)));
}

TEST_CASE("deck series for x = t^5 + t^4 match the known expansions") {
  CurveAnalysis A = analyze_curve(curve_of("t^5 + t^4", "t + 1/t"), 2, 1);
  const RamPoint& simple = A.points[0];  // a = -4/5
  REQUIRE(simple.decks.size() == 1);
  CHECK(simple.decks[0].coeff(1) == q(-1));
  CHECK(simple.decks[0].coeff(2) == q(5, 2));
  CHECK(simple.decks[0].coeff(3) == q(-25, 4));
  CHECK(simple.decks[0].coeff(4) == q(325, 16));

  const RamPoint& quad = A.points[1];  // a = 0, index 4
  REQUIRE(quad.decks.size() == 3);
  FieldElement i = FieldElement::root_of_unity(4, 1);
  // theta^(2)(t) = -t - t^2/2 - t^3/4 - 7t^4/16 - 17t^5/32 + ...
  const FieldSeries& d2 = quad.decks[1];
  CHECK(d2.coeff(1) == q(-1));
  CHECK(d2.coeff(2) == q(-1, 2));
  CHECK(d2.coeff(3) == q(-1, 4));
  CHECK(d2.coeff(4) == q(-7, 16));
  CHECK(d2.coeff(5) == q(-17, 32));
  // theta^(1)(t) = i t + (1/4 + i/4) t^2 + (1/8 - 5i/16) t^3
  //               - (9/32 + 7i/64) t^4 - (15/64 - 157i/512) t^5 + ...
  const FieldSeries& d1 = quad.decks[0];
  CHECK(d1.coeff(1) == i);
  CHECK(d1.coeff(2) == q(1, 4) + i * q(1, 4));
  CHECK(d1.coeff(3) == q(1, 8) - i * q(5, 16));
  CHECK(d1.coeff(4) == -(q(9, 32) + i * q(7, 64)));
  CHECK(d1.coeff(5) == -(q(15, 64) - i * q(157, 512)));
  // theta^(3) is the conjugate branch with leading coefficient -i
  const FieldSeries& d3 = quad.decks[2];
  CHECK(d3.coeff(1) == -i);
  CHECK(d3.coeff(2) == q(1, 4) - i * q(1, 4));
}

TEST_CASE("deck transformations compose as a cyclic group") {
  for (const char* xs : {"(1/3)*t^3", "t^5 + t^4"}) {
    CurveAnalysis A = analyze_curve(curve_of(xs, "t + 1/t"), 2, 1);
    for (const RamPoint& pt : A.points) {
      const int k = pt.index;
      std::vector<FieldSeries> th;
      th.push_back(FieldSeries::identity());
      for (const auto& d : pt.decks) th.push_back(d);
      for (int m = 0; m < k; ++m)
        for (int n = 0; n < k; ++n) {
          FieldSeries c = FieldSeries::compose(th[static_cast<size_t>(m)],
                                               th[static_cast<size_t>(n)], A.work_order);
          const FieldSeries& tgt = th[static_cast<size_t>((m + n) % k)];
          long upto = std::min({c.order(), tgt.order(), A.work_order});
          CHECK(c.agrees_with(tgt, upto));
        }
      // deck property x(theta(s)) = x(s)
      for (const auto& d : pt.decks) {
        FieldSeries xt = FieldSeries::compose(pt.x_loc, d, A.work_order);
        long upto = std::min({xt.order(), pt.x_loc.order(), A.work_order});
        CHECK(xt.agrees_with(pt.x_loc, upto));
      }
      // leading coefficients are the distinct nontrivial k-th roots of unity
      for (size_t j = 0; j < pt.decks.size(); ++j)
        CHECK(pt.decks[j].coeff(1) ==
              FieldElement::root_of_unity(static_cast<unsigned>(k), static_cast<long>(j + 1)));
    }
  }
}

TEST_CASE("phi at a = 1 for x = t + 1/t, y = t") {
  CurveAnalysis A = analyze_curve(curve_of("t + 1/t", "t"), 2, 1);
  const RamPoint& pt = A.points[1];
  // y x' = (1+s)(1 - (1+s)^{-2}) = (1+s) - 1/(1+s) = 2s - s^2 + s^3 - ...
  // phi  = s^2 - s^3/3 + s^4/4 - s^5/5 + ...
  CHECK(pt.phi.coeff(1).is_zero());
  CHECK(pt.phi.coeff(2) == q(1));
  CHECK(pt.phi.coeff(3) == q(-1, 3));
  CHECK(pt.phi.coeff(4) == q(1, 4));
  CHECK(pt.phi.coeff(5) == q(-1, 5));
}

TEST_CASE("swap is an involution") {
  SpectralCurve c = curve_of("t + 1/t", "(t-2)^2");
  c.base_point = Rational(7, 2);
  SpectralCurve s = swapped(c);
  CHECK(s.x == c.y);
  CHECK(s.y == c.x);
  CHECK(s.base_point == c.base_point);
  SpectralCurve ss = swapped(s);
  CHECK(ss.x == c.x);
  CHECK(ss.y == c.y);
}

TEST_CASE("default truncation order formula") {
  CHECK(default_truncation_order(2, 1, 2) == 6 * 5 + 8 + 8);
  CHECK(default_truncation_order(3, 1, 5) == 6 * 7 + 20 + 8);
  // override wins
  SpectralCurve c = curve_of("t + 1/t", "t");
  c.truncation_order = 33;
  CurveAnalysis A = analyze_curve(c, 3, 2);
  CHECK(A.work_order == 33);
}

TEST_CASE("exact monomial curves give exact decks") {
  CurveAnalysis A = analyze_curve(curve_of("(1/5)*t^5", "t + 1/t"), 3, 1);
  const RamPoint& pt = A.points[0];
  REQUIRE(pt.decks.size() == 4);
  for (size_t j = 0; j < 4; ++j) {
    CHECK(pt.decks[j].span() == 1);
    CHECK(pt.decks[j].coeff(1) == FieldElement::root_of_unity(5, static_cast<long>(j + 1)));
  }
}
