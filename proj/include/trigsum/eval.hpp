#pragma once

#include <map>
#include <optional>
#include <string>

#include "trigsum/cyclotomic.hpp"
#include "trigsum/expr.hpp"
#include "trigsum/interval.hpp"

namespace trigsum {

/// Integer values for the free parameters of an expression.
using ParamBinding = std::map<std::string, long, std::less<>>;

/// Value of a pi-free, trig-free subexpression (bounds, exponents, plain
/// rational arithmetic). Throws DomainError / UnboundParameter.
BigRational eval_rational(const Expr& e, const ParamBinding& binding);

/// The angle denoted by a trig argument; it must reduce to q*pi with q
/// rational once parameters are substituted.
PiRational eval_angle(const Expr& arg, const ParamBinding& binding);

/// lcm(4, 2b) over every instantiated angle a*pi/b in the expression.
long minimal_conductor(const Expr& e, const ParamBinding& binding);

/// Exact value in Q(zeta_M). M defaults to minimal_conductor(e); a given
/// conductor must be a multiple of it. Throws PoleError at singularities
/// (including division by a subexpression that is exactly zero) and
/// DomainError for sqrt.
CycloElem eval_exact(const Expr& e, const ParamBinding& binding, std::optional<long> conductor = std::nullopt);

/// Rigorous enclosure at the given working precision. Throws PoleError if a
/// divisor's enclosure contains zero.
IntervalReal eval_interval(const Expr& e, const ParamBinding& binding, long precision_bits);

}  // namespace trigsum
