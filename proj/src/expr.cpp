#include "ramrec/expr.hpp"

#include <cctype>
#include <sstream>

namespace ramrec {

bool Expr::equals(const Expr& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Literal: return literal == o.literal;
    case Kind::Variable: return true;
    case Kind::Neg: return lhs->equals(*o.lhs);
    case Kind::Pow: return exponent == o.exponent && lhs->equals(*o.lhs);
    default: return lhs->equals(*o.lhs) && rhs->equals(*o.rhs);
  }
}

namespace {

struct Token {
  enum class Kind { Integer, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  Integer value;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= src_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      tok_.kind = Token::Kind::Integer;
      tok_.value = Integer(src_.substr(i_, j - i_));
      i_ = j;
      return;
    }
    if (c == 't') {
      tok_.kind = Token::Kind::Var;
      ++i_;
      return;
    }
    switch (c) {
      case '+': tok_.kind = Token::Kind::Plus; break;
      case '-': tok_.kind = Token::Kind::Minus; break;
      case '*': tok_.kind = Token::Kind::Star; break;
      case '/': tok_.kind = Token::Kind::Slash; break;
      case '^': tok_.kind = Token::Kind::Caret; break;
      case '(': tok_.kind = Token::Kind::LParen; break;
      case ')': tok_.kind = Token::Kind::RParen; break;
      default:
        fail(ErrorKind::ParseError,
             "position " + std::to_string(i_) + ": unexpected character '" +
                 std::string(1, c) + "'; expected a number, 't', an operator or parentheses");
    }
    ++i_;
  }

  const std::string& src_;
  size_t i_ = 0;
  Token tok_{};
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  ExprPtr parse() {
    ExprPtr e = additive();
    if (lex_.peek().kind != Token::Kind::End)
      fail(ErrorKind::ParseError,
           "position " + std::to_string(lex_.peek().pos) +
               ": expected an operator or end of input");
    return e;
  }

 private:
  static ExprPtr mk(Expr::Kind k) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    return e;
  }

  ExprPtr additive() {
    ExprPtr e = multiplicative();
    while (true) {
      auto k = lex_.peek().kind;
      if (k != Token::Kind::Plus && k != Token::Kind::Minus) return e;
      lex_.take();
      ExprPtr rhs = multiplicative();
      ExprPtr node = mk(k == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub);
      node->lhs = std::move(e);
      node->rhs = std::move(rhs);
      e = std::move(node);
    }
  }

  ExprPtr multiplicative() {
    ExprPtr e = unary();
    while (true) {
      auto k = lex_.peek().kind;
      if (k != Token::Kind::Star && k != Token::Kind::Slash) return e;
      lex_.take();
      ExprPtr rhs = unary();
      ExprPtr node = mk(k == Token::Kind::Star ? Expr::Kind::Mul : Expr::Kind::Div);
      node->lhs = std::move(e);
      node->rhs = std::move(rhs);
      e = std::move(node);
    }
  }

  ExprPtr unary() {
    if (lex_.peek().kind == Token::Kind::Minus) {
      lex_.take();
      ExprPtr node = mk(Expr::Kind::Neg);
      node->lhs = unary();
      return node;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (lex_.peek().kind != Token::Kind::Caret) return base;
    size_t at = lex_.peek().pos;
    lex_.take();
    // The exponent is a unary-level subexpression that must fold to an
    // integer ("t^2", "t^(-2)").
    ExprPtr es = unary();
    RationalFunction v = lower_expression(*es);
    if (!v.is_constant())
      fail(ErrorKind::ParseError,
           "position " + std::to_string(at) + ": exponent must be an integer constant");
    FieldElement c = v.constant_value();
    Rational q = c.rational_value();
    if (denominator(q) != 1)
      fail(ErrorKind::ParseError,
           "position " + std::to_string(at) + ": exponent must be an integer");
    Integer ev = numerator(q);
    if (abs(ev) > 1000000)
      fail(ErrorKind::ParseError,
           "position " + std::to_string(at) + ": exponent out of range");
    ExprPtr node = mk(Expr::Kind::Pow);
    node->exponent = ev.convert_to<long>();
    node->lhs = std::move(base);
    return node;
  }

  ExprPtr atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::Integer: {
        ExprPtr e = mk(Expr::Kind::Literal);
        e->literal = lex_.take().value;
        return e;
      }
      case Token::Kind::Var:
        lex_.take();
        return mk(Expr::Kind::Variable);
      case Token::Kind::LParen: {
        lex_.take();
        ExprPtr e = additive();
        if (lex_.peek().kind != Token::Kind::RParen)
          fail(ErrorKind::ParseError,
               "position " + std::to_string(lex_.peek().pos) + ": expected ')'");
        lex_.take();
        return e;
      }
      default:
        fail(ErrorKind::ParseError,
             "position " + std::to_string(t.pos) +
                 ": expected a number, 't', '-' or '('");
    }
  }

  Lexer lex_;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

void print_rec(const Expr& e, std::ostream& os) {
  auto child = [&](const Expr& c, bool needs_paren) {
    if (needs_paren) os << "(";
    print_rec(c, os);
    if (needs_paren) os << ")";
  };
  switch (e.kind) {
    case Expr::Kind::Literal: os << e.literal.str(); return;
    case Expr::Kind::Variable: os << "t"; return;
    case Expr::Kind::Neg:
      os << "-";
      child(*e.lhs, precedence(e.lhs->kind) < 3);
      return;
    case Expr::Kind::Pow:
      child(*e.lhs, precedence(e.lhs->kind) < 5);
      os << "^";
      if (e.exponent < 0)
        os << "(" << e.exponent << ")";
      else
        os << e.exponent;
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      child(*e.lhs, precedence(e.lhs->kind) < 1);
      os << (e.kind == Expr::Kind::Add ? " + " : " - ");
      child(*e.rhs, precedence(e.rhs->kind) <= 1);
      return;
    }
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      child(*e.lhs, precedence(e.lhs->kind) < 2);
      os << (e.kind == Expr::Kind::Mul ? "*" : "/");
      child(*e.rhs, precedence(e.rhs->kind) <= 2);
      return;
    }
  }
}

}  // namespace

ExprPtr parse_expression(const std::string& src) { return Parser(src).parse(); }

std::string print_expression(const Expr& e) {
  std::ostringstream os;
  print_rec(e, os);
  return os.str();
}

RationalFunction lower_expression(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return RationalFunction::constant(Rational(e.literal));
    case Expr::Kind::Variable:
      return RationalFunction::variable(kVarT);
    case Expr::Kind::Neg:
      return -lower_expression(*e.lhs);
    case Expr::Kind::Add:
      return lower_expression(*e.lhs) + lower_expression(*e.rhs);
    case Expr::Kind::Sub:
      return lower_expression(*e.lhs) - lower_expression(*e.rhs);
    case Expr::Kind::Mul:
      return lower_expression(*e.lhs) * lower_expression(*e.rhs);
    case Expr::Kind::Div:
      return lower_expression(*e.lhs) / lower_expression(*e.rhs);
    case Expr::Kind::Pow:
      return lower_expression(*e.lhs).pow(e.exponent);
  }
  fail(ErrorKind::InternalError, "unhandled expression node");
}

RationalFunction parse_curve_function(const std::string& src) {
  return lower_expression(*parse_expression(src));
}

}  // namespace ramrec
