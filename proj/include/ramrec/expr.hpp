#ifndef RAMREC_EXPR_HPP
#define RAMREC_EXPR_HPP

#include <memory>
#include <string>

#include "ramrec/ratfun.hpp"

namespace ramrec {

// AST for curve expressions in t: rational literals, +, -, *, /, ^ with
// integer exponent (negative allowed), unary minus, parentheses.
struct Expr {
  enum class Kind { Literal, Variable, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  Integer literal;           // Kind::Literal (non-negative integer token)
  long exponent = 0;         // Kind::Pow
  std::unique_ptr<Expr> lhs; // operand / left operand / pow base
  std::unique_ptr<Expr> rhs;

  bool equals(const Expr& o) const;
};

using ExprPtr = std::unique_ptr<Expr>;

// Standard precedence: ^ > unary - > * / > + -, with left-assoc binary
// operators and right-assoc ^. Whitespace insensitive; no implicit
// multiplication. Throws ParseError with position and expectation.
ExprPtr parse_expression(const std::string& src);

// Precedence-aware printer; parse_expression(print(e)) reproduces e.
std::string print_expression(const Expr& e);

// Lower to a rational function of t.
RationalFunction lower_expression(const Expr& e);

RationalFunction parse_curve_function(const std::string& src);

}  // namespace ramrec

#endif
