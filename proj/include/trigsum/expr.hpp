#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <variant>

#include "trigsum/bigint.hpp"
#include "trigsum/cyclotomic.hpp"

namespace trigsum {

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace node {

struct Number {
  BigRational value;
};
struct Pi {};
/// A free parameter or a bound index variable.
struct Param {
  std::string name;
};
struct Neg {
  ExprPtr operand;
};
enum class BinOp { Add, Sub, Mul, Div };
struct Binary {
  BinOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
/// base^exponent; the exponent must evaluate to an integer (possibly negative).
struct Power {
  ExprPtr base;
  ExprPtr exponent;
};
struct Trig {
  TrigFn fn;
  ExprPtr arg;
};
/// Only the interval evaluator accepts square roots.
struct Sqrt {
  ExprPtr arg;
};
enum class AggKind { Sum, Prod };
/// sum/prod over index = lower..upper (inclusive; empty when upper < lower).
struct Aggregate {
  AggKind kind;
  std::string index;
  ExprPtr lower;
  ExprPtr upper;
  ExprPtr body;
};

}  // namespace node

/// Immutable AST node of the identity language.
class Expr {
 public:
  using Node = std::variant<node::Number, node::Pi, node::Param, node::Neg, node::Binary, node::Power, node::Trig,
                            node::Sqrt, node::Aggregate>;

  Expr(Node n, SourceSpan span = {}) : node_(std::move(n)), span_(span) {}

  const Node& node() const noexcept { return node_; }
  const SourceSpan& span() const noexcept { return span_; }

  template <typename T>
  const T* as() const noexcept {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
  SourceSpan span_;
};

// Builders for programmatic construction.
ExprPtr num(const BigRational& value);
ExprPtr pi();
ExprPtr param(std::string name);
ExprPtr neg(ExprPtr e);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr power(ExprPtr base, ExprPtr exponent);
ExprPtr power(ExprPtr base, long exponent);
ExprPtr trig(TrigFn fn, ExprPtr arg);
ExprPtr sqrt(ExprPtr arg);
ExprPtr sum(std::string index, ExprPtr lower, ExprPtr upper, ExprPtr body);
ExprPtr prod(std::string index, ExprPtr lower, ExprPtr upper, ExprPtr body);

/// Structural equality, ignoring source spans.
bool same_tree(const Expr& a, const Expr& b);

/// Minimal-parenthesis rendering in the input grammar; parse(to_string(e))
/// rebuilds the same tree for trees whose literals are non-negative integers.
std::string to_string(const Expr& e);

/// Names referenced but not bound by an enclosing sum/prod.
std::set<std::string> free_parameters(const Expr& e);

bool contains_sqrt(const Expr& e);

}  // namespace trigsum
