#include "ramrec/field.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace ramrec;
using testutil::rand_field_element;
using testutil::rand_int;

namespace {
FieldElement zeta(unsigned n, long j = 1) { return FieldElement::root_of_unity(n, j); }
FieldElement q(long a, long b = 1) { return FieldElement::from_rational(Rational(a, b)); }
}  // namespace

TEST_CASE("cyclotomic polynomial values") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{Rational(-1), Rational(1)});
  CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(cyclotomic_polynomial(3) ==
        std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
  CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  CHECK(cyclotomic_polynomial(6) ==
        std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_polynomial(12).size() == 5);
}

TEST_CASE("basic arithmetic identities") {
  CHECK(zeta(4) * zeta(4) == q(-1));
  CHECK((q(1) + zeta(4)) * (q(1) - zeta(4)) == q(2));
  CHECK(zeta(3) + zeta(3) * zeta(3) == q(-1));
}

TEST_CASE("root_of_unity") {
  CHECK(zeta(2, 1) == q(-1));
  CHECK(zeta(4, 2) == q(-1));
  CHECK(zeta(5, 1) * zeta(5, 4) == q(1));
  CHECK(zeta(7, 0) == q(1));
  CHECK(zeta(1, 0) == q(1));
  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    CHECK(zeta(n).pow(static_cast<long>(n)) == q(1));
    FieldElement sum = FieldElement::zero();
    for (unsigned j = 0; j < n; ++j) sum += zeta(n, static_cast<long>(j));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("field axioms on random samples") {
  for (int iter = 0; iter < 60; ++iter) {
    unsigned n = std::vector<unsigned>{1, 2, 3, 4, 5, 6, 8, 12}[static_cast<size_t>(
        rand_int(0, 7))];
    FieldElement a = rand_field_element(n);
    FieldElement b = rand_field_element(n);
    FieldElement c = rand_field_element(n);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == FieldElement::one());
      CHECK((a / a) == FieldElement::one());
    }
  }
}

TEST_CASE("embedding coherence") {
  for (int iter = 0; iter < 30; ++iter) {
    Rational r = testutil::rand_rational();
    FieldElement e = FieldElement::from_rational(r);
    for (unsigned n : {2u, 3u, 6u, 12u}) {
      FieldElement big = e.embedded(n);
      CHECK(big.is_rational());
      CHECK(big.rational_value() == r);
      CHECK(big == e);
    }
  }
  // Cross-conductor equality of non-rational values.
  CHECK(zeta(3).embedded(6) == zeta(3));
  CHECK(zeta(6, 2) == zeta(3));
  CHECK(zeta(12, 4) == zeta(3));
}

TEST_CASE("mixed conductor arithmetic") {
  FieldElement a = zeta(3);
  FieldElement b = zeta(4);
  FieldElement prod = a * b;
  CHECK(prod == zeta(12, 7));  // zeta_3 * zeta_4 = zeta_12^{4+3}
  CHECK(prod.conductor() == 12);
  CHECK((zeta(6, 3)) == q(-1));
}

TEST_CASE("textual round trip") {
  for (int iter = 0; iter < 40; ++iter) {
    unsigned n = std::vector<unsigned>{1, 3, 4, 5, 8, 12}[static_cast<size_t>(rand_int(0, 5))];
    FieldElement a = rand_field_element(n);
    FieldElement back = FieldElement::parse(a.to_string(), n);
    CHECK(back == a);
  }
  CHECK(q(-13, 72).to_string() == "-13/72");
  CHECK(q(7).to_string() == "7");
  CHECK(FieldElement::parse("-13/72", 1) == q(-13, 72));
  CHECK(zeta(4).to_string() == "z");
  CHECK((q(1) + q(2) * zeta(4)).to_string() == "1 + 2*z");
}

TEST_CASE("inverse in a nontrivial extension") {
  FieldElement a = q(1) + zeta(5) + zeta(5, 3);
  CHECK(!a.is_zero());
  CHECK(a * a.inverse() == FieldElement::one());
  FieldElement b = q(2) - zeta(12, 5);
  CHECK(b / b == FieldElement::one());
}

TEST_CASE("deterministic total order") {
  FieldElement a = q(1, 2), b = q(2, 3);
  CHECK(a.cmp(b) < 0);
  CHECK(b.cmp(a) > 0);
  CHECK(a.cmp(a) == 0);
  CHECK(zeta(3).cmp(zeta(3, 2)) != 0);
}
