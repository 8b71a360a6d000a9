#include <gtest/gtest.h>

#include "support/properties.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/eval.hpp"
#include "trigsum/parser.hpp"

using namespace trigsum;

namespace {

BigRational q(long a, long b = 1) { return BigRational(BigInteger(a), BigInteger(b)); }

std::size_t parse_error_position(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return std::string::npos;
}

}  // namespace

TEST(Parser, PrecedenceAndAssociativity) {
  EXPECT_EQ(to_string(*parse("1 - 2 - 3")), "1-2-3");
  EXPECT_EQ(to_string(*parse("1 - (2 - 3)")), "1-(2-3)");
  EXPECT_EQ(to_string(*parse("2*3^2")), "2*3^2");
  EXPECT_EQ(eval_rational(*parse("2^(3^1)"), {}), q(8));
  EXPECT_THROW(parse("2^3^1"), ParseError);  // exponents are atoms
  EXPECT_EQ(eval_rational(*parse("-2^2"), {}), q(-4));
  EXPECT_EQ(eval_rational(*parse("(-2)^2"), {}), q(4));
  EXPECT_EQ(eval_rational(*parse("12/4/3"), {}), q(1));
}

TEST(Parser, Identities) {
  const auto [lhs, rhs] = parse_identity("sin(pi/6) = 1/2");
  EXPECT_EQ(to_string(*lhs), "sin(pi/6)");
  EXPECT_EQ(to_string(*rhs), "1/2");
  const auto [l2, r2] = parse_identity("cos(pi/3) - 1/2");
  EXPECT_EQ(to_string(*r2), "0");
}

TEST(Parser, AggregatesAndParameterExponents) {
  const ExprPtr e = parse("sum(j=1..(k-1)/2, (-1)^(j-1)*sin((2*j-1)*pi/(2*k)))");
  EXPECT_EQ(free_parameters(*e), (std::set<std::string>{"k"}));
  EXPECT_EQ(to_string(*parse("(-1)^j")), "(-1)^j");
  EXPECT_EQ(eval_rational(*parse("sum(j=1..n, (-1)^j*j)"), {{"n", 4}}), q(2));
  EXPECT_EQ(eval_rational(*parse("prod(i=1..5, i)"), {}), q(120));
  EXPECT_EQ(eval_rational(*parse("sum(i=3..2, i)"), {}), q(0));  // empty sum
}

TEST(Parser, ErrorPositions) {
  EXPECT_EQ(parse_error_position("sin(pi/6"), 8u);
  EXPECT_EQ(parse_error_position("1 + * 2"), 4u);
  EXPECT_EQ(parse_error_position("2^(1/2)"), 2u);
  EXPECT_EQ(parse_error_position("3 $ 4"), 2u);
  EXPECT_EQ(parse_error_position("sum(k=1..k, k)"), 4u);
  EXPECT_EQ(parse_error_position("sum(k=1..3, sum(k=1..2, k))"), 16u);
  EXPECT_EQ(parse_error_position("sum(pi=1..3, 1)"), 4u);
  EXPECT_THROW(parse_identity("1 = 2 = 3"), ParseError);
}

TEST(Evaluation, RationalAndAngles) {
  EXPECT_EQ(eval_rational(*parse("(n^2-1)/3"), {{"n", 7}}), q(16));
  EXPECT_THROW(eval_rational(*parse("m + 1"), {}), UnboundParameter);
  EXPECT_THROW(eval_rational(*parse("1/(n-2)"), {{"n", 2}}), DivisionByZero);
  EXPECT_EQ(eval_angle(*parse("(2*k+1)*pi/(2*n)"), {{"k", 1}, {"n", 5}}), (PiRational{3, 10}));
  EXPECT_THROW(eval_angle(*parse("pi + 1"), {}), DomainError);
}

TEST(Evaluation, ConductorIsLcmOfAngleDenominators) {
  EXPECT_EQ(minimal_conductor(*parse("sin(pi/7)"), {}), 28);
  EXPECT_EQ(minimal_conductor(*parse("cos(pi/9)*cos(2*pi/9)*cos(4*pi/9)"), {}), 36);
  EXPECT_EQ(minimal_conductor(*parse("sum(k=1..n-1, 1/sin(k*pi/n)^2)"), {{"n", 5}}), 20);
  EXPECT_EQ(minimal_conductor(*parse("3/4"), {}), 4);
}

TEST(Evaluation, ExactValues) {
  EXPECT_EQ(eval_exact(*parse("cos(pi/9)*cos(2*pi/9)*cos(4*pi/9)"), {}).as_rational(), q(1, 8));
  EXPECT_EQ(eval_exact(*parse("sum(k=1..n-1, csc(k*pi/n)^2)"), {{"n", 41}}).as_rational(), q(41 * 41 - 1, 3));
  EXPECT_EQ(eval_exact(*parse("sin(pi/6)"), {}, 24).as_rational(), q(1, 2));
  EXPECT_THROW(eval_exact(*parse("sin(pi/6)"), {}, 20), DomainError);
  EXPECT_THROW(eval_exact(*parse("sqrt(2)"), {}), DomainError);
  EXPECT_THROW(eval_exact(*parse("csc(pi)"), {}), PoleError);
  EXPECT_THROW(eval_exact(*parse("1/(sin(pi/3)^2 - 3/4)"), {}), PoleError);
}

TEST(Evaluation, IntervalValues) {
  const IntervalReal v = eval_interval(*parse("sqrt(2)^2 + sin(pi/6)"), {}, 128);
  EXPECT_TRUE(v.contains(q(5, 2)));
  EXPECT_TRUE(v.narrower_than_pow2(100));
  EXPECT_THROW(eval_interval(*parse("1/sin(pi)"), {}, 128), PoleError);
}

TEST(ExprProperties, ParseRoundTrip) {
  const auto r = oracle::parse_round_trip();
  EXPECT_TRUE(r.ok()) << r.summary();
}
