#include "trigsum/expr.hpp"

#include <sstream>

namespace trigsum {

ExprPtr num(const BigRational& value) { return std::make_shared<const Expr>(node::Number{value}); }
ExprPtr pi() { return std::make_shared<const Expr>(node::Pi{}); }
ExprPtr param(std::string name) { return std::make_shared<const Expr>(node::Param{std::move(name)}); }
ExprPtr neg(ExprPtr e) { return std::make_shared<const Expr>(node::Neg{std::move(e)}); }

namespace {

ExprPtr binary(node::BinOp op, ExprPtr a, ExprPtr b) {
  return std::make_shared<const Expr>(node::Binary{op, std::move(a), std::move(b)});
}

ExprPtr aggregate(node::AggKind kind, std::string index, ExprPtr lower, ExprPtr upper, ExprPtr body) {
  return std::make_shared<const Expr>(
      node::Aggregate{kind, std::move(index), std::move(lower), std::move(upper), std::move(body)});
}

}  // namespace

ExprPtr add(ExprPtr a, ExprPtr b) { return binary(node::BinOp::Add, std::move(a), std::move(b)); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return binary(node::BinOp::Sub, std::move(a), std::move(b)); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return binary(node::BinOp::Mul, std::move(a), std::move(b)); }
ExprPtr div(ExprPtr a, ExprPtr b) { return binary(node::BinOp::Div, std::move(a), std::move(b)); }
ExprPtr power(ExprPtr base, ExprPtr exponent) {
  return std::make_shared<const Expr>(node::Power{std::move(base), std::move(exponent)});
}
ExprPtr power(ExprPtr base, long exponent) {
  ExprPtr e = num(BigRational(exponent < 0 ? -exponent : exponent));
  return power(std::move(base), exponent < 0 ? neg(std::move(e)) : std::move(e));
}
ExprPtr trig(TrigFn fn, ExprPtr arg) { return std::make_shared<const Expr>(node::Trig{fn, std::move(arg)}); }
ExprPtr sqrt(ExprPtr arg) { return std::make_shared<const Expr>(node::Sqrt{std::move(arg)}); }
ExprPtr sum(std::string index, ExprPtr lower, ExprPtr upper, ExprPtr body) {
  return aggregate(node::AggKind::Sum, std::move(index), std::move(lower), std::move(upper), std::move(body));
}
ExprPtr prod(std::string index, ExprPtr lower, ExprPtr upper, ExprPtr body) {
  return aggregate(node::AggKind::Prod, std::move(index), std::move(lower), std::move(upper), std::move(body));
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node());
        if constexpr (std::is_same_v<T, node::Number>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, node::Pi>) {
          return true;
        } else if constexpr (std::is_same_v<T, node::Param>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, node::Neg>) {
          return same_tree(*x.operand, *y.operand);
        } else if constexpr (std::is_same_v<T, node::Binary>) {
          return x.op == y.op && same_tree(*x.lhs, *y.lhs) && same_tree(*x.rhs, *y.rhs);
        } else if constexpr (std::is_same_v<T, node::Power>) {
          return same_tree(*x.base, *y.base) && same_tree(*x.exponent, *y.exponent);
        } else if constexpr (std::is_same_v<T, node::Trig>) {
          return x.fn == y.fn && same_tree(*x.arg, *y.arg);
        } else if constexpr (std::is_same_v<T, node::Sqrt>) {
          return same_tree(*x.arg, *y.arg);
        } else {
          return x.kind == y.kind && x.index == y.index && same_tree(*x.lower, *y.lower) &&
                 same_tree(*x.upper, *y.upper) && same_tree(*x.body, *y.body);
        }
      },
      a.node());
}

namespace {

// Binding strength: sums 1, products 2, unary minus 3, powers 4, atoms 5.
int precedence(const Expr& e) {
  if (const auto* b = e.as<node::Binary>()) {
    return (b->op == node::BinOp::Add || b->op == node::BinOp::Sub) ? 1 : 2;
  }
  if (e.as<node::Neg>()) return 3;
  if (e.as<node::Power>()) return 4;
  if (const auto* n = e.as<node::Number>()) {
    if (!n->value.is_integer()) return 2;
    if (n->value.sign() < 0) return 3;
  }
  return 5;
}

void render(std::ostream& os, const Expr& e);

void render_wrapped(std::ostream& os, const Expr& e, bool wrap) {
  if (wrap) os << '(';
  render(os, e);
  if (wrap) os << ')';
}

void render(std::ostream& os, const Expr& e) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, node::Number>) {
          if (x.value.is_integer() && x.value.sign() < 0) {
            os << '-' << x.value.abs();
          } else {
            os << x.value;
          }
        } else if constexpr (std::is_same_v<T, node::Pi>) {
          os << "pi";
        } else if constexpr (std::is_same_v<T, node::Param>) {
          os << x.name;
        } else if constexpr (std::is_same_v<T, node::Neg>) {
          os << '-';
          render_wrapped(os, *x.operand, precedence(*x.operand) < 3);
        } else if constexpr (std::is_same_v<T, node::Binary>) {
          const int p = precedence(e);
          const char op = x.op == node::BinOp::Add ? '+' : x.op == node::BinOp::Sub ? '-' : x.op == node::BinOp::Mul ? '*' : '/';
          render_wrapped(os, *x.lhs, precedence(*x.lhs) < p);
          os << op;
          // Left-associative: equal precedence on the right needs parentheses.
          render_wrapped(os, *x.rhs, precedence(*x.rhs) <= p);
        } else if constexpr (std::is_same_v<T, node::Power>) {
          render_wrapped(os, *x.base, precedence(*x.base) < 5);
          os << '^';
          const auto* n = x.exponent->template as<node::Number>();
          const auto* ng = x.exponent->template as<node::Neg>();
          const node::Number* inner = ng ? ng->operand->template as<node::Number>() : nullptr;
          if (n && n->value.is_integer() && n->value.sign() >= 0) {
            os << n->value;
          } else if (inner && inner->value.is_integer() && inner->value.sign() >= 0) {
            os << '-' << inner->value;
          } else if (const auto* name = x.exponent->template as<node::Param>()) {
            os << name->name;
          } else {
            render_wrapped(os, *x.exponent, true);
          }
        } else if constexpr (std::is_same_v<T, node::Trig>) {
          os << trig_name(x.fn) << '(';
          render(os, *x.arg);
          os << ')';
        } else if constexpr (std::is_same_v<T, node::Sqrt>) {
          os << "sqrt(";
          render(os, *x.arg);
          os << ')';
        } else {
          os << (x.kind == node::AggKind::Sum ? "sum(" : "prod(") << x.index << '=';
          render(os, *x.lower);
          os << "..";
          render(os, *x.upper);
          os << ", ";
          render(os, *x.body);
          os << ')';
        }
      },
      e.node());
}

void collect_free(const Expr& e, std::set<std::string>& bound, std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, node::Param>) {
          if (!bound.count(x.name)) out.insert(x.name);
        } else if constexpr (std::is_same_v<T, node::Neg>) {
          collect_free(*x.operand, bound, out);
        } else if constexpr (std::is_same_v<T, node::Binary>) {
          collect_free(*x.lhs, bound, out);
          collect_free(*x.rhs, bound, out);
        } else if constexpr (std::is_same_v<T, node::Power>) {
          collect_free(*x.base, bound, out);
          collect_free(*x.exponent, bound, out);
        } else if constexpr (std::is_same_v<T, node::Trig> || std::is_same_v<T, node::Sqrt>) {
          collect_free(*x.arg, bound, out);
        } else if constexpr (std::is_same_v<T, node::Aggregate>) {
          collect_free(*x.lower, bound, out);
          collect_free(*x.upper, bound, out);
          const bool fresh = bound.insert(x.index).second;
          collect_free(*x.body, bound, out);
          if (fresh) bound.erase(x.index);
        }
      },
      e.node());
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  render(os, e);
  return os.str();
}

std::set<std::string> free_parameters(const Expr& e) {
  std::set<std::string> bound, out;
  collect_free(e, bound, out);
  return out;
}

bool contains_sqrt(const Expr& e) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, node::Sqrt>) {
          return true;
        } else if constexpr (std::is_same_v<T, node::Neg>) {
          return contains_sqrt(*x.operand);
        } else if constexpr (std::is_same_v<T, node::Binary>) {
          return contains_sqrt(*x.lhs) || contains_sqrt(*x.rhs);
        } else if constexpr (std::is_same_v<T, node::Power>) {
          return contains_sqrt(*x.base) || contains_sqrt(*x.exponent);
        } else if constexpr (std::is_same_v<T, node::Trig>) {
          return contains_sqrt(*x.arg);
        } else if constexpr (std::is_same_v<T, node::Aggregate>) {
          return contains_sqrt(*x.lower) || contains_sqrt(*x.upper) || contains_sqrt(*x.body);
        } else {
          return false;
        }
      },
      e.node());
}

}  // namespace trigsum
