#include "brouwer1d/expr.hpp"

#include <cctype>

namespace brouwer1d {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using Base = std::variant<ConstNode, VarNode, BinaryNode, IfNegNode>;

const Base& as_variant(const ExprNode& n) { return n; }

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        lhs = Expr::binary(BinaryOp::add, lhs, parse_term());
      } else if (peek('-')) {
        ++pos_;
        lhs = Expr::binary(BinaryOp::sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        lhs = Expr::binary(BinaryOp::mul, lhs, parse_factor());
      } else if (peek('/')) {
        ++pos_;
        lhs = Expr::binary(BinaryOp::div, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (is_digit(c) || ((c == '-' || c == '+') && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
      return parse_literal();
    }
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      if (ident == "x") return Expr::var();
      if (ident == "ifneg") {
        expect('(');
        Expr guard = parse_expr();
        expect(',');
        Expr then_branch = parse_expr();
        expect(',');
        Expr else_branch = parse_expr();
        expect(')');
        return Expr::ifneg(guard, then_branch, else_branch);
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(ident) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr parse_literal() {
    std::size_t start = pos_;
    if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    // A slash directly followed by a digit continues the literal.
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' && is_digit(text_[pos_ + 1])) {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    try {
      return Expr::constant(Rational::parse(text_.substr(start, pos_ - start)));
    } catch (const InvalidInput& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

char op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return '+';
    case BinaryOp::sub: return '-';
    case BinaryOp::mul: return '*';
    case BinaryOp::div: return '/';
  }
  return '?';
}

void print_to(const Expr& e, std::string& out) {
  std::visit(Overloaded{
                 [&](const ConstNode& c) { out += c.value.to_string(); },
                 [&](const VarNode&) { out += 'x'; },
                 [&](const BinaryNode& b) {
                   out += '(';
                   print_to(b.lhs, out);
                   out += ' ';
                   out += op_symbol(b.op);
                   out += ' ';
                   print_to(b.rhs, out);
                   out += ')';
                 },
                 [&](const IfNegNode& n) {
                   out += "ifneg(";
                   print_to(n.guard, out);
                   out += ", ";
                   print_to(n.then_branch, out);
                   out += ", ";
                   print_to(n.else_branch, out);
                   out += ')';
                 },
             },
             as_variant(e.node()));
}

}  // namespace

Expr Expr::constant(Rational value) {
  return Expr(std::make_shared<const ExprNode>(ConstNode{std::move(value)}));
}

Expr Expr::var() { return Expr(std::make_shared<const ExprNode>(VarNode{})); }

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const ExprNode>(BinaryNode{op, std::move(lhs), std::move(rhs)}));
}

Expr Expr::ifneg(Expr guard, Expr then_branch, Expr else_branch) {
  return Expr(std::make_shared<const ExprNode>(
      IfNegNode{std::move(guard), std::move(then_branch), std::move(else_branch)}));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const Base& x = as_variant(a.node());
  const Base& y = as_variant(b.node());
  if (x.index() != y.index()) return false;
  return std::visit(Overloaded{
                        [&](const ConstNode& c) { return c.value == std::get<ConstNode>(y).value; },
                        [&](const VarNode&) { return true; },
                        [&](const BinaryNode& n) {
                          const auto& m = std::get<BinaryNode>(y);
                          return n.op == m.op && n.lhs == m.lhs && n.rhs == m.rhs;
                        },
                        [&](const IfNegNode& n) {
                          const auto& m = std::get<IfNegNode>(y);
                          return n.guard == m.guard && n.then_branch == m.then_branch &&
                                 n.else_branch == m.else_branch;
                        },
                    },
                    x);
}

Expr operator+(Expr a, Expr b) { return Expr::binary(BinaryOp::add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(BinaryOp::sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(BinaryOp::mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(BinaryOp::div, std::move(a), std::move(b)); }

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

Rational eval(const Expr& e, const Rational& x) {
  return std::visit(Overloaded{
                        [&](const ConstNode& c) { return c.value; },
                        [&](const VarNode&) { return x; },
                        [&](const BinaryNode& b) {
                          Rational lhs = eval(b.lhs, x);
                          Rational rhs = eval(b.rhs, x);
                          switch (b.op) {
                            case BinaryOp::add: return lhs + rhs;
                            case BinaryOp::sub: return lhs - rhs;
                            case BinaryOp::mul: return lhs * rhs;
                            case BinaryOp::div: return lhs / rhs;
                          }
                          throw std::logic_error("bad operator");
                        },
                        [&](const IfNegNode& n) {
                          return eval(n.guard, x).sign() < 0 ? eval(n.then_branch, x)
                                                             : eval(n.else_branch, x);
                        },
                    },
                    as_variant(e.node()));
}

std::string print(const Expr& e) {
  std::string out;
  print_to(e, out);
  return out;
}

ScalarMap as_map(Expr e) {
  return [e = std::move(e)](const Rational& x) { return eval(e, x); };
}

}  // namespace brouwer1d
