#include <gtest/gtest.h>

#include <random>

#include "trigsum/errors.hpp"
#include "trigsum/parser.hpp"
#include "trigsum/verify.hpp"

using namespace trigsum;

namespace {

VerifyReport check(std::string_view text, const ParamBinding& b = {}, VerifyOptions o = {}) {
  const auto [l, r] = parse_identity(text);
  return verify(l, r, b, o);
}

VerifyOptions numeric(long target = 256) {
  VerifyOptions o;
  o.mode = Mode::Numeric;
  o.precision_target = target;
  return o;
}

// Random sums of trig values at angles a*pi/b with b <= 12.
std::string random_trig_sum(std::mt19937& rng) {
  auto u = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  static const char* fns[] = {"sin", "cos"};
  std::string s;
  const long terms = u(1, 4);
  for (long i = 0; i < terms; ++i) {
    if (i > 0) s += u(0, 1) ? " + " : " - ";
    s += std::to_string(u(1, 3)) + "*" + fns[u(0, 1)] + "(" + std::to_string(u(0, 23)) + "*pi/" + std::to_string(u(1, 12)) +
         ")^" + std::to_string(u(1, 3));
  }
  return s;
}

}  // namespace

TEST(Verify, MorriesLaw) {
  const VerifyReport r = check("cos(pi/9)*cos(2*pi/9)*cos(4*pi/9) = 1/8");
  EXPECT_EQ(r.verdict, Verdict::Proved);
  EXPECT_EQ(r.summary(), "proved (exact, conductor 36)");
}

TEST(Verify, HeptagonIdentity) {
  const VerifyReport r = check("sin(3*pi/7)^2/sin(2*pi/7) - sin(2*pi/7)^2/sin(pi/7) + sin(pi/7)^2/sin(3*pi/7) = 0");
  EXPECT_EQ(r.verdict, Verdict::Proved);
  EXPECT_EQ(r.conductor, 28);
}

TEST(Verify, RefutationCarriesWitness) {
  const VerifyReport r = check("sin(pi/6) = 1/3");
  EXPECT_EQ(r.verdict, Verdict::Refuted);
  EXPECT_EQ(r.witness, "1/6");
  EXPECT_EQ(r.summary(), "refuted (exact, conductor 12) witness 1/6");
  EXPECT_FALSE(r.passed());
}

TEST(Verify, PolesAndUnboundParameters) {
  EXPECT_THROW(check("csc(pi) = 1"), PoleError);
  EXPECT_THROW(check("sin(pi/n) = 0"), UnboundParameter);
}

TEST(Verify, ExactModeRefusesSqrtNumericModeConfirms) {
  EXPECT_THROW(check("sqrt(2)^2 = 2"), DomainError);
  const VerifyReport r = check("sqrt(2)^2 = 2", {}, numeric());
  EXPECT_EQ(r.verdict, Verdict::ConfirmedToPrecision);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(check("sqrt(2) = 141421356/100000000", {}, numeric()).verdict, Verdict::Refuted);
}

TEST(Verify, GaussSeventeenGon) {
  VerifyOptions o = numeric(200);
  o.start_precision = 256;
  const VerifyReport r = check(
      "cos(pi/17) = (1 - sqrt(17) + sqrt(34-2*sqrt(17)) + 2*sqrt(17+3*sqrt(17)+sqrt(34-2*sqrt(17))+2*sqrt(34+2*sqrt(17))))/16",
      {}, o);
  EXPECT_EQ(r.verdict, Verdict::ConfirmedToPrecision);
  EXPECT_EQ(r.precision_bits, 256);
}

TEST(Verify, NumericLadderGivesUpAtMaxPrecision) {
  VerifyOptions o = numeric(5000);
  o.max_precision = 512;
  EXPECT_EQ(check("sin(pi/6) = 1/2", {}, o).verdict, Verdict::Inconclusive);
}

TEST(VerifyProperties, ReflexiveSymmetricAndConductorIndependent) {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    const std::string a = random_trig_sum(rng), b = random_trig_sum(rng);
    const VerifyReport self = check(a + " = " + a);
    EXPECT_EQ(self.verdict, Verdict::Proved) << a;
    const VerifyReport ab = check(a + " = " + b), ba = check(b + " = " + a);
    EXPECT_EQ(ab.verdict, ba.verdict) << a << " vs " << b;
    EXPECT_EQ(ab.conductor, ba.conductor);
    for (long mult : {2L, 3L}) {
      VerifyOptions o;
      o.conductor = ab.conductor * mult;
      const VerifyReport wide = check(a + " = " + b, {}, o);
      EXPECT_EQ(wide.verdict, ab.verdict) << a << " vs " << b << " at conductor " << *o.conductor;
      EXPECT_EQ(wide.conductor, ab.conductor * mult);
    }
  }
}

TEST(VerifyProperties, ExactAndNumericModesAgree) {
  std::mt19937 rng(12);
  int proved = 0, refuted = 0;
  for (int i = 0; i < 80; ++i) {
    std::string a = random_trig_sum(rng);
    // Half the cases compare a with a rewritten copy, which makes them true.
    const std::string b = (i % 2 == 0) ? "(" + a + ")*sin(pi/6)*2" : random_trig_sum(rng);
    const VerifyReport exact = check(a + " = " + b);
    const VerifyReport approx = check(a + " = " + b, {}, numeric(128));
    if (exact.verdict == Verdict::Proved) {
      ++proved;
      EXPECT_EQ(approx.verdict, Verdict::ConfirmedToPrecision) << a << " = " << b;
    } else {
      ++refuted;
      EXPECT_EQ(exact.verdict, Verdict::Refuted);
      EXPECT_EQ(approx.verdict, Verdict::Refuted) << a << " = " << b;
    }
  }
  EXPECT_GT(proved, 0);
  EXPECT_GT(refuted, 0);
}

TEST(VerifyProperties, ParameterizedSweepMatchesClosedForm) {
  for (long n = 2; n <= 30; ++n) {
    EXPECT_EQ(check("sum(k=1..n-1, 1/sin(k*pi/n)^2) = (n^2-1)/3", {{"n", n}}).verdict, Verdict::Proved) << n;
    EXPECT_EQ(check("sum(k=1..n-1, 1/sin(k*pi/n)^2) = (n^2+1)/3", {{"n", n}}).verdict, Verdict::Refuted) << n;
  }
}
