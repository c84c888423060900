#include "ramrec/expr.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace ramrec;
using testutil::rand_int;

namespace {
RationalFunction T() { return RationalFunction::variable(kVarT); }
RationalFunction C(long a, long b = 1) { return RationalFunction::constant(Rational(a, b)); }

// Random AST generator for the round-trip property.
ExprPtr rand_expr(int depth) {
  auto mk = [](Expr::Kind k) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    return e;
  };
  if (depth <= 0 || rand_int(0, 3) == 0) {
    if (rand_int(0, 1)) {
      auto e = mk(Expr::Kind::Literal);
      e->literal = Integer(rand_int(0, 20));
      return e;
    }
    return mk(Expr::Kind::Variable);
  }
  switch (rand_int(0, 5)) {
    case 0: {
      auto e = mk(Expr::Kind::Neg);
      e->lhs = rand_expr(depth - 1);
      return e;
    }
    case 1: {
      auto e = mk(Expr::Kind::Pow);
      e->lhs = rand_expr(depth - 1);
      e->exponent = rand_int(-4, 4);
      return e;
    }
    case 2:
    case 3: {
      auto e = mk(rand_int(0, 1) ? Expr::Kind::Add : Expr::Kind::Sub);
      e->lhs = rand_expr(depth - 1);
      e->rhs = rand_expr(depth - 1);
      return e;
    }
    default: {
      auto e = mk(rand_int(0, 1) ? Expr::Kind::Mul : Expr::Kind::Div);
      e->lhs = rand_expr(depth - 1);
      e->rhs = rand_expr(depth - 1);
      return e;
    }
  }
}
}  // namespace

TEST_CASE("grammar lowering of the curve shapes") {
  CHECK(parse_curve_function("t + 1/t") == (T() * T() + C(1)) / T());
  CHECK(parse_curve_function("(t-1)^4") ==
        T().pow(4) - C(4) * T().pow(3) + C(6) * T() * T() - C(4) * T() + C(1));
  CHECK(parse_curve_function("t^(-2)") == C(1) / (T() * T()));
  CHECK(parse_curve_function("(1/3)*t^3") == C(1, 3) * T().pow(3));
  CHECK(parse_curve_function("t^5 + t^4") == T().pow(5) + T().pow(4));
  CHECK(parse_curve_function(" - t ") == -T());
  CHECK(parse_curve_function("2*t - t*2").is_zero());
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_curve_function("1 - 2 - 3") == C(-4));
  CHECK(parse_curve_function("12/2/3") == C(2));
  CHECK(parse_curve_function("2 + 3*4") == C(14));
  CHECK(parse_curve_function("-t^2") == -(T() * T()));
  CHECK(parse_curve_function("(-t)^2") == T() * T());
  CHECK(parse_curve_function("t^2^3") == T().pow(8));
  CHECK(parse_curve_function("2^-2") == C(1, 4));
}

TEST_CASE("parse errors carry positions and expectations") {
  for (const char* bad : {"t +", "(t", "t)", "3t", "t^t", "^2", "t ** 2", "q + 1", ""}) {
    CHECK_THROWS_AS((void)parse_expression(bad), Error);
  }
  try {
    (void)parse_expression("t + ");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("print/parse round trip on random ASTs") {
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    ExprPtr e = rand_expr(4);
    std::string s = print_expression(*e);
    ExprPtr back;
    try {
      back = parse_expression(s);
    } catch (const Error&) {
      FAIL("printed form failed to parse: ", s);
      continue;
    }
    CHECK(back->equals(*e));
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("lowering failures") {
  CHECK_THROWS_AS((void)parse_curve_function("1/(t-t)"), Error);
  CHECK_THROWS_AS((void)parse_curve_function("0^(-1)"), Error);
}
