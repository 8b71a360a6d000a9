#pragma once

#include <string_view>
#include <utility>

#include "trigsum/expr.hpp"

namespace trigsum {

/// Parses one expression of the identity language:
///
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := base ('^' exponent)? | '-' factor
///   exponent:= integer | '-' integer | ident | '(' expr ')'
///   base    := integer | 'pi' | ident | trig | sumprod | 'sqrt' '(' expr ')' | '(' expr ')'
///   trig    := ('sin'|'cos'|'tan'|'cot'|'sec'|'csc') '(' expr ')'
///   sumprod := ('sum'|'prod') '(' ident '=' expr '..' expr ',' expr ')'
///
/// Rational literals are written as quotients ("1/8"). Throws ParseError.
ExprPtr parse(std::string_view text);

/// Parses "lhs = rhs"; a text without '=' is read as "expr = 0".
std::pair<ExprPtr, ExprPtr> parse_identity(std::string_view text);

}  // namespace trigsum
