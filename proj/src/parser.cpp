#include "trigsum/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Equals, DotDot, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t begin;
  std::size_t end;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start, i});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start, i});
      continue;
    }
    if (c == '.' && i + 1 < s.size() && s[i + 1] == '.') {
      out.push_back({Tok::DotDot, "..", start, start + 2});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '=': kind = Tok::Equals; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start, start + 1});
    ++i;
  }
  out.push_back({Tok::End, "", s.size(), s.size()});
  return out;
}

bool is_reserved(std::string_view name) {
  return name == "pi" || name == "sqrt" || name == "sum" || name == "prod" || parse_trig_name(name).has_value();
}

// Value of an identifier-free constant subtree, if it is one.
std::optional<BigRational> fold_constant(const Expr& e) {
  if (const auto* n = e.as<node::Number>()) return n->value;
  if (const auto* g = e.as<node::Neg>()) {
    auto v = fold_constant(*g->operand);
    if (v) return -*v;
    return std::nullopt;
  }
  if (const auto* b = e.as<node::Binary>()) {
    auto l = fold_constant(*b->lhs);
    auto r = fold_constant(*b->rhs);
    if (!l || !r) return std::nullopt;
    switch (b->op) {
      case node::BinOp::Add: return *l + *r;
      case node::BinOp::Sub: return *l - *r;
      case node::BinOp::Mul: return *l * *r;
      case node::BinOp::Div:
        if (r->is_zero()) return std::nullopt;
        return *l / *r;
    }
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    expect(Tok::End, "end of input");
    return e;
  }

  std::pair<ExprPtr, ExprPtr> parse_identity() {
    ExprPtr lhs = expr();
    if (peek().kind == Tok::End) return {lhs, num(BigRational(0))};
    expect(Tok::Equals, "'=' or end of input");
    ExprPtr rhs = expr();
    expect(Tok::End, "end of input");
    return {lhs, rhs};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  std::size_t last_end() const { return pos_ == 0 ? 0 : tokens_[pos_ - 1].end; }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      const Token& t = peek();
      throw ParseError(std::string("expected ") + what + (t.kind == Tok::End ? ", found end of input" : ", found '" + t.text + "'"),
                       t.begin);
    }
    return take();
  }

  ExprPtr make(Expr::Node n, std::size_t begin) {
    return std::make_shared<const Expr>(std::move(n), SourceSpan{begin, last_end()});
  }

  ExprPtr expr() {
    const std::size_t begin = peek().begin;
    ExprPtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const auto op = take().kind == Tok::Plus ? node::BinOp::Add : node::BinOp::Sub;
      ExprPtr rhs = term();
      lhs = make(node::Binary{op, lhs, rhs}, begin);
    }
    return lhs;
  }

  ExprPtr term() {
    const std::size_t begin = peek().begin;
    ExprPtr lhs = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const auto op = take().kind == Tok::Star ? node::BinOp::Mul : node::BinOp::Div;
      ExprPtr rhs = factor();
      lhs = make(node::Binary{op, lhs, rhs}, begin);
    }
    return lhs;
  }

  ExprPtr factor() {
    const std::size_t begin = peek().begin;
    if (peek().kind == Tok::Minus) {
      take();
      ExprPtr operand = factor();
      return make(node::Neg{operand}, begin);
    }
    ExprPtr b = base();
    if (peek().kind != Tok::Caret) return b;
    take();
    ExprPtr exponent = exponent_part();
    return make(node::Power{b, exponent}, begin);
  }

  ExprPtr exponent_part() {
    const std::size_t begin = peek().begin;
    if (peek().kind == Tok::Minus) {
      take();
      const Token& t = expect(Tok::Int, "integer exponent");
      ExprPtr n = make(node::Number{BigRational(BigInteger(t.text))}, t.begin);
      return make(node::Neg{n}, begin);
    }
    if (peek().kind == Tok::Int) {
      const Token& t = take();
      return make(node::Number{BigRational(BigInteger(t.text))}, begin);
    }
    if (peek().kind == Tok::Ident && !is_reserved(peek().text)) {
      const Token& t = take();
      return make(node::Param{t.text}, begin);
    }
    if (peek().kind == Tok::LParen) {
      take();
      ExprPtr e = expr();
      expect(Tok::RParen, "')'");
      if (auto v = fold_constant(*e); v && !v->is_integer()) {
        throw ParseError("non-integer exponent " + v->to_string(), begin);
      }
      return e;
    }
    throw ParseError("expected an integer exponent", peek().begin);
  }

  ExprPtr base() {
    const Token& t = peek();
    const std::size_t begin = t.begin;
    switch (t.kind) {
      case Tok::Int: {
        take();
        return make(node::Number{BigRational(BigInteger(t.text))}, begin);
      }
      case Tok::LParen: {
        take();
        ExprPtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        return ident_base();
      default:
        throw ParseError(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", begin);
    }
  }

  ExprPtr ident_base() {
    const Token& t = take();
    const std::size_t begin = t.begin;
    if (t.text == "pi") return make(node::Pi{}, begin);
    if (auto fn = parse_trig_name(t.text)) {
      expect(Tok::LParen, "'(' after function name");
      ExprPtr arg = expr();
      expect(Tok::RParen, "')'");
      return make(node::Trig{*fn, arg}, begin);
    }
    if (t.text == "sqrt") {
      expect(Tok::LParen, "'(' after sqrt");
      ExprPtr arg = expr();
      expect(Tok::RParen, "')'");
      return make(node::Sqrt{arg}, begin);
    }
    if (t.text == "sum" || t.text == "prod") return aggregate(t.text == "sum" ? node::AggKind::Sum : node::AggKind::Prod, begin);
    return make(node::Param{t.text}, begin);
  }

  ExprPtr aggregate(node::AggKind kind, std::size_t begin) {
    expect(Tok::LParen, "'('");
    const Token& idx = expect(Tok::Ident, "index variable");
    if (is_reserved(idx.text)) throw ParseError("'" + idx.text + "' cannot be used as an index variable", idx.begin);
    if (std::find(bound_.begin(), bound_.end(), idx.text) != bound_.end()) {
      throw ParseError("index variable '" + idx.text + "' is already bound by an enclosing sum/prod", idx.begin);
    }
    const std::string name = idx.text;
    const std::size_t name_pos = idx.begin;
    expect(Tok::Equals, "'='");
    ExprPtr lower = expr();
    expect(Tok::DotDot, "'..'");
    ExprPtr upper = expr();
    for (const ExprPtr& bound : {lower, upper}) {
      if (free_parameters(*bound).count(name)) {
        throw ParseError("unbound index variable '" + name + "' used in its own range", name_pos);
      }
    }
    expect(Tok::Comma, "','");
    bound_.push_back(name);
    ExprPtr body = expr();
    bound_.pop_back();
    expect(Tok::RParen, "')'");
    return make(node::Aggregate{kind, name, lower, upper, body}, begin);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::pair<ExprPtr, ExprPtr> parse_identity(std::string_view text) { return Parser(text).parse_identity(); }

}  // namespace trigsum
