#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "brouwer1d/rational.hpp"

namespace brouwer1d {

/// Syntax error in expression text; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class BinaryOp { add, sub, mul, div };

struct ExprNode;

/// Immutable expression in the single variable x. Nodes are shared, so
/// copies are cheap.
class Expr {
 public:
  static Expr constant(Rational value);
  static Expr var();
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr ifneg(Expr guard, Expr then_branch, Expr else_branch);

  const ExprNode& node() const { return *node_; }

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

struct ConstNode {
  Rational value;
};
struct VarNode {};
struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};
/// `then_branch` when guard(x) < 0, else `else_branch` (guard == 0 included).
struct IfNegNode {
  Expr guard;
  Expr then_branch;
  Expr else_branch;
};

struct ExprNode : std::variant<ConstNode, VarNode, BinaryNode, IfNegNode> {
  using variant::variant;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);

/// Parses the grammar
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := literal | "x" | "(" expr ")" | "ifneg" "(" expr "," expr "," expr ")"
/// A literal is `[+-]digits[/digits]` with no interior whitespace, so "1/2"
/// is the constant one half while "1 / 2" is a division node.
Expr parse(std::string_view text);

/// Exact evaluation. Throws ArithmeticError on division by zero.
Rational eval(const Expr& e, const Rational& x);

/// Fully parenthesized canonical text; parse(print(e)) == e.
std::string print(const Expr& e);

/// Type-erased real map x -> f(x) over the rationals.
using ScalarMap = std::function<Rational(const Rational&)>;

/// Wraps an expression as a ScalarMap.
ScalarMap as_map(Expr e);

}  // namespace brouwer1d
