#include "trigsum/eval.hpp"

#include <numeric>
#include <utility>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

// Temporarily binds an index variable, restoring any shadowed value.
class IndexScope {
 public:
  IndexScope(ParamBinding& env, const std::string& name) : env_(env), name_(name) {
    if (auto it = env_.find(name_); it != env_.end()) saved_ = it->second;
  }
  IndexScope(const IndexScope&) = delete;
  IndexScope& operator=(const IndexScope&) = delete;
  ~IndexScope() {
    if (saved_) {
      env_[name_] = *saved_;
    } else {
      env_.erase(name_);
    }
  }
  void set(long v) { env_[name_] = v; }

 private:
  ParamBinding& env_;
  const std::string& name_;
  std::optional<long> saved_;
};

long lookup(const ParamBinding& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw UnboundParameter("parameter '" + name + "' has no value");
  return it->second;
}

long as_long_integer(const BigRational& q, const Expr& where, const char* what) {
  if (!q.is_integer()) throw DomainError(std::string(what) + " '" + to_string(where) + "' is not an integer: " + q.to_string());
  return q.num().to_long();
}

long integer_exponent(const node::Power& p, const ParamBinding& env) {
  return as_long_integer(eval_rational(*p.exponent, env), *p.exponent, "exponent");
}

struct Bounds {
  long lower;
  long upper;
};

Bounds bounds_of(const node::Aggregate& a, const ParamBinding& env) {
  return {as_long_integer(eval_rational(*a.lower, env), *a.lower, "lower bound"),
          as_long_integer(eval_rational(*a.upper, env), *a.upper, "upper bound")};
}

// q*pi + c
struct LinearPi {
  BigRational pi_coeff;
  BigRational constant;
};

LinearPi eval_linear(const Expr& e, const ParamBinding& env) {
  return std::visit(
      [&](const auto& x) -> LinearPi {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, node::Pi>) {
          return {BigRational(1), BigRational(0)};
        } else if constexpr (std::is_same_v<T, node::Neg>) {
          LinearPi v = eval_linear(*x.operand, env);
          return {-v.pi_coeff, -v.constant};
        } else if constexpr (std::is_same_v<T, node::Binary>) {
          LinearPi l = eval_linear(*x.lhs, env);
          LinearPi r = eval_linear(*x.rhs, env);
          switch (x.op) {
            case node::BinOp::Add: return {l.pi_coeff + r.pi_coeff, l.constant + r.constant};
            case node::BinOp::Sub: return {l.pi_coeff - r.pi_coeff, l.constant - r.constant};
            case node::BinOp::Mul:
              if (!l.pi_coeff.is_zero() && !r.pi_coeff.is_zero()) {
                throw DomainError("angle '" + to_string(e) + "' is not linear in pi");
              }
              return {l.pi_coeff * r.constant + r.pi_coeff * l.constant, l.constant * r.constant};
            case node::BinOp::Div:
              if (!r.pi_coeff.is_zero()) throw DomainError("angle '" + to_string(e) + "' divides by pi");
              if (r.constant.is_zero()) throw DomainError("angle '" + to_string(e) + "' divides by zero");
              return {l.pi_coeff / r.constant, l.constant / r.constant};
          }
          throw DomainError("bad operator");
        } else {
          return {BigRational(0), eval_rational(e, env)};
        }
      },
      e.node());
}

// Walks every instantiated trig node, handing (fn, angle) to `visit`.
template <typename F>
void for_each_angle(const Expr& e, ParamBinding& env, F&& visit) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, node::Neg>) {
          for_each_angle(*x.operand, env, visit);
        } else if constexpr (std::is_same_v<T, node::Binary>) {
          for_each_angle(*x.lhs, env, visit);
          for_each_angle(*x.rhs, env, visit);
        } else if constexpr (std::is_same_v<T, node::Power>) {
          for_each_angle(*x.base, env, visit);
        } else if constexpr (std::is_same_v<T, node::Sqrt>) {
          for_each_angle(*x.arg, env, visit);
        } else if constexpr (std::is_same_v<T, node::Trig>) {
          visit(eval_angle(*x.arg, env));
        } else if constexpr (std::is_same_v<T, node::Aggregate>) {
          const Bounds b = bounds_of(x, env);
          IndexScope scope(env, x.index);
          for (long i = b.lower; i <= b.upper; ++i) {
            scope.set(i);
            for_each_angle(*x.body, env, visit);
          }
        }
      },
      e.node());
}

class ExactEvaluator {
 public:
  ExactEvaluator(FieldPtr field, ParamBinding env) : field_(std::move(field)), env_(std::move(env)) {}

  CycloElem value(const Expr& e) {
    return std::visit(
        [&](const auto& x) -> CycloElem {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, node::Number>) {
            return CycloElem(field_, x.value);
          } else if constexpr (std::is_same_v<T, node::Pi>) {
            throw DomainError("pi outside a trig argument has no exact cyclotomic value");
          } else if constexpr (std::is_same_v<T, node::Param>) {
            return CycloElem(field_, BigRational(lookup(env_, x.name)));
          } else if constexpr (std::is_same_v<T, node::Neg>) {
            return -value(*x.operand);
          } else if constexpr (std::is_same_v<T, node::Binary>) {
            switch (x.op) {
              case node::BinOp::Add: return value(*x.lhs) + value(*x.rhs);
              case node::BinOp::Sub: return value(*x.lhs) - value(*x.rhs);
              case node::BinOp::Mul: return value(*x.lhs) * value(*x.rhs);
              case node::BinOp::Div: return value(*x.lhs) * reciprocal(*x.rhs);
            }
            throw DomainError("bad operator");
          } else if constexpr (std::is_same_v<T, node::Power>) {
            const long n = integer_exponent(x, env_);
            return n >= 0 ? pow(value(*x.base), n) : pow(reciprocal(*x.base), -n);
          } else if constexpr (std::is_same_v<T, node::Trig>) {
            return trig(x.fn, e, *x.arg);
          } else if constexpr (std::is_same_v<T, node::Sqrt>) {
            throw DomainError("sqrt has no exact evaluation; use numeric mode");
          } else {
            return aggregate(x);
          }
        },
        e.node());
  }

  // 1/e, built from the structure of e where possible so that reciprocals
  // of trig values use their closed forms instead of a field inversion.
  CycloElem reciprocal(const Expr& e) {
    if (const auto* t = e.as<node::Trig>()) {
      try {
        return trig(reciprocal_fn(t->fn), e, *t->arg);
      } catch (const PoleError&) {
        throw PoleError("division by zero: '" + to_string(e) + "' vanishes at angle " +
                        eval_angle(*t->arg, env_).normalized().to_string());
      }
    }
    if (const auto* g = e.as<node::Neg>()) return -reciprocal(*g->operand);
    if (const auto* b = e.as<node::Binary>()) {
      if (b->op == node::BinOp::Mul) return reciprocal(*b->lhs) * reciprocal(*b->rhs);
      if (b->op == node::BinOp::Div) return value(*b->rhs) * reciprocal(*b->lhs);
    }
    if (const auto* p = e.as<node::Power>()) {
      const long n = integer_exponent(*p, env_);
      return n >= 0 ? pow(reciprocal(*p->base), n) : pow(value(*p->base), -n);
    }
    CycloElem v = value(e);
    if (v.is_zero()) throw PoleError("division by zero: '" + to_string(e) + "' evaluates to 0");
    return v.inverse();
  }

 private:
  CycloElem trig(TrigFn fn, const Expr& whole, const Expr& arg) {
    const PiRational angle = eval_angle(arg, env_).normalized();
    const auto key = std::make_pair(fn, angle);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    try {
      CycloElem v = trig_value(fn, angle, field_);
      cache_.emplace(key, v);
      return v;
    } catch (const PoleError&) {
      throw PoleError("pole of " + std::string(trig_name(fn)) + " at angle " + angle.to_string() + " in '" +
                      to_string(whole) + "'");
    }
  }

  CycloElem aggregate(const node::Aggregate& a) {
    const Bounds b = bounds_of(a, env_);
    const bool is_sum = a.kind == node::AggKind::Sum;
    CycloElem acc(field_, BigRational(is_sum ? 0 : 1));
    IndexScope scope(env_, a.index);
    for (long i = b.lower; i <= b.upper; ++i) {
      scope.set(i);
      if (is_sum) {
        acc += value(*a.body);
      } else {
        acc *= value(*a.body);
      }
    }
    return acc;
  }

  FieldPtr field_;
  ParamBinding env_;
  std::map<std::pair<TrigFn, PiRational>, CycloElem> cache_;
};

class IntervalEvaluator {
 public:
  IntervalEvaluator(mpfr_prec_t prec, ParamBinding env) : prec_(prec), env_(std::move(env)) {}

  IntervalReal value(const Expr& e) {
    return std::visit(
        [&](const auto& x) -> IntervalReal {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, node::Number>) {
            return IntervalReal::point(x.value, prec_);
          } else if constexpr (std::is_same_v<T, node::Pi>) {
            return IntervalReal::pi(prec_);
          } else if constexpr (std::is_same_v<T, node::Param>) {
            return IntervalReal::point(BigRational(lookup(env_, x.name)), prec_);
          } else if constexpr (std::is_same_v<T, node::Neg>) {
            return -value(*x.operand);
          } else if constexpr (std::is_same_v<T, node::Binary>) {
            IntervalReal l = value(*x.lhs);
            IntervalReal r = value(*x.rhs);
            switch (x.op) {
              case node::BinOp::Add: return l + r;
              case node::BinOp::Sub: return l - r;
              case node::BinOp::Mul: return l * r;
              case node::BinOp::Div:
                try {
                  return l / r;
                } catch (const PoleError&) {
                  throw PoleError("enclosure of divisor '" + to_string(*x.rhs) + "' contains zero at " +
                                  std::to_string(prec_) + " bits");
                }
            }
            throw DomainError("bad operator");
          } else if constexpr (std::is_same_v<T, node::Power>) {
            return pow(value(*x.base), integer_exponent(x, env_));
          } else if constexpr (std::is_same_v<T, node::Trig>) {
            return trig_enclosure(x.fn, eval_angle(*x.arg, env_), prec_);
          } else if constexpr (std::is_same_v<T, node::Sqrt>) {
            return sqrt(value(*x.arg));
          } else {
            const Bounds b = bounds_of(x, env_);
            const bool is_sum = x.kind == node::AggKind::Sum;
            IntervalReal acc = IntervalReal::point(BigRational(is_sum ? 0 : 1), prec_);
            IndexScope scope(env_, x.index);
            for (long i = b.lower; i <= b.upper; ++i) {
              scope.set(i);
              acc = is_sum ? acc + value(*x.body) : acc * value(*x.body);
            }
            return acc;
          }
        },
        e.node());
  }

 private:
  mpfr_prec_t prec_;
  ParamBinding env_;
};

}  // namespace

BigRational eval_rational(const Expr& e, const ParamBinding& binding) {
  return std::visit(
      [&](const auto& x) -> BigRational {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, node::Number>) {
          return x.value;
        } else if constexpr (std::is_same_v<T, node::Param>) {
          return BigRational(lookup(binding, x.name));
        } else if constexpr (std::is_same_v<T, node::Neg>) {
          return -eval_rational(*x.operand, binding);
        } else if constexpr (std::is_same_v<T, node::Binary>) {
          BigRational l = eval_rational(*x.lhs, binding);
          BigRational r = eval_rational(*x.rhs, binding);
          switch (x.op) {
            case node::BinOp::Add: return l + r;
            case node::BinOp::Sub: return l - r;
            case node::BinOp::Mul: return l * r;
            case node::BinOp::Div:
              if (r.is_zero()) throw DivisionByZero("division by zero in '" + to_string(e) + "'");
              return l / r;
          }
          throw DomainError("bad operator");
        } else if constexpr (std::is_same_v<T, node::Power>) {
          const BigRational base = eval_rational(*x.base, binding);
          const long n = integer_exponent(x, binding);
          if (base.is_zero() && n < 0) throw DomainError("zero to a negative power in '" + to_string(e) + "'");
          return pow(base, n);
        } else if constexpr (std::is_same_v<T, node::Aggregate>) {
          ParamBinding env = binding;
          const Bounds b = bounds_of(x, env);
          const bool is_sum = x.kind == node::AggKind::Sum;
          BigRational acc(is_sum ? 0 : 1);
          for (long i = b.lower; i <= b.upper; ++i) {
            env[x.index] = i;
            acc = is_sum ? acc + eval_rational(*x.body, env) : acc * eval_rational(*x.body, env);
          }
          return acc;
        } else {
          throw DomainError("'" + to_string(e) + "' is not a rational expression");
        }
      },
      e.node());
}

PiRational eval_angle(const Expr& arg, const ParamBinding& binding) {
  LinearPi v;
  try {
    v = eval_linear(arg, binding);
  } catch (const DomainError& err) {
    throw DomainError("trig argument '" + to_string(arg) + "' is not a rational multiple of pi (" + err.what() + ")");
  }
  if (!v.constant.is_zero()) {
    throw DomainError("trig argument '" + to_string(arg) + "' is not a rational multiple of pi");
  }
  return PiRational::from(v.pi_coeff);
}

long minimal_conductor(const Expr& e, const ParamBinding& binding) {
  long M = 4;
  ParamBinding env = binding;
  for_each_angle(e, env, [&](const PiRational& angle) { M = std::lcm(M, required_conductor(angle)); });
  return M;
}

CycloElem eval_exact(const Expr& e, const ParamBinding& binding, std::optional<long> conductor) {
  const long needed = minimal_conductor(e, binding);
  const long M = conductor.value_or(needed);
  if (M % needed != 0) {
    throw DomainError("conductor " + std::to_string(M) + " is not a multiple of the required " + std::to_string(needed));
  }
  ExactEvaluator ev(make_field(M), binding);
  return ev.value(e);
}

IntervalReal eval_interval(const Expr& e, const ParamBinding& binding, long precision_bits) {
  if (precision_bits < MPFR_PREC_MIN) throw DomainError("precision too small");
  IntervalEvaluator ev(static_cast<mpfr_prec_t>(precision_bits), binding);
  return ev.value(e);
}

}  // namespace trigsum
