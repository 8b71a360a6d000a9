#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "trigsum/checks.hpp"
#include "trigsum/errors.hpp"

using namespace trigsum;

namespace {

BigRational q(long a, long b = 1) { return BigRational(BigInteger(a), BigInteger(b)); }

}  // namespace

TEST(ParityIndicator, OddIsOne) {
  EXPECT_EQ(chi_odd(3), 1);
  EXPECT_EQ(chi_odd(-3), 1);
  EXPECT_EQ(chi_odd(0), 0);
  EXPECT_EQ(chi_odd(8), 0);
}

TEST(Shevelev, SmallCasesByHand) {
  // Multiples of 3 below 4 in base 2: 0 (digit sum 0) and 3 (11, sum 2).
  const ShevelevReport r = shevelev_check(3, 1);
  EXPECT_EQ(r.digit_count, BigInteger(2));
  EXPECT_EQ(r.tangent_side, q(2));
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(shevelev_check(3, 2).equal);
  EXPECT_EQ(shevelev_check(5, 1).tangent_side, q(4));
}

TEST(Shevelev, ConfiguredPairsAndGrowthRate) {
  const std::vector<std::pair<long, long>> pairs = {{3, 5}, {5, 3}, {7, 2}, {9, 2}};
  for (auto [n, pmax] : pairs) {
    for (long p = 1; p <= pmax; ++p) {
      const ShevelevReport r = shevelev_check(n, p);
      EXPECT_TRUE(r.equal) << n << "," << p << ": " << r.digit_count << " vs " << r.tangent_side;
    }
    const ShevelevReport top = shevelev_check(n, pmax);
    EXPECT_NEAR(top.lambda, std::log(1 / std::tan(std::numbers::pi / (2 * n))) / std::log(n - 1.0), 1e-12);
    // With the 2/n prefactor removed the rate is already close at small p.
    EXPECT_NEAR(top.normalized_ratio, top.lambda, 0.05) << "n = " << n;
    // The unnormalized ratio sits below lambda by log(n/2)/(2p log(n-1)) up
    // to lower-order terms, which is why it is not used as the sanity check.
    const double offset = std::log(n / 2.0) / (2.0 * pmax * std::log(n - 1.0));
    EXPECT_NEAR(top.lambda - top.raw_ratio, offset, 0.01) << "n = " << n;
  }
}

TEST(Shevelev, BudgetAndDomain) {
  EXPECT_THROW(shevelev_check(9, 5), BudgetExceeded);
  EXPECT_THROW(shevelev_check(4, 1), DomainError);
}

TEST(Franke, EnclosesTheClosedForm) {
  for (long N : {3L, 4L, 5L, 6L, 10L}) {
    const FrankeReport r = franke_check(N);
    EXPECT_TRUE(r.enclosed) << "N = " << N << " partial " << r.partial << " closed " << r.closed_form;
    const double pi = std::numbers::pi;
    const double closed = (N - 1.0) * (N - 2.0) * (N * N + 3.0 * N + 2.0) * pi * pi / (90.0 * N * N);
    EXPECT_NEAR(r.closed_form_value, closed, 1e-12 * closed);
  }
  EXPECT_NEAR(franke_check(3).closed_form_value, 4 * std::numbers::pi * std::numbers::pi / 81, 1e-14);
}

TEST(Franke, ShortTruncationStillEnclosesAndWiderBoundDoesNotLie) {
  const FrankeReport r = franke_check(5, 128, 1e-2, 1024);
  EXPECT_TRUE(r.enclosed);
  EXPECT_EQ(r.terms, 1024);
  EXPECT_GT(r.tail_bound, 0);
}

TEST(Conjectures, ClosedFormsProvedForSmallK) {
  for (long k = 1; k <= 6; ++k) {
    const auto [first, second] = conjecture_closed_forms(k);
    EXPECT_EQ(first.verdict, Verdict::Proved) << k;
    EXPECT_EQ(second.verdict, Verdict::Proved) << k;
  }
}

TEST(Conjectures, LimitsAtLargeK) {
  const IntervalReal s1 = conjecture_sum_enclosure(1, 500);
  const IntervalReal s2 = conjecture_sum_enclosure(2, 500);
  EXPECT_NEAR(s1.midpoint(), -0.5, 0.01);
  EXPECT_NEAR(s2.midpoint(), 0.5, 0.01);
  EXPECT_TRUE(s1.narrower_than_pow2(60));
}

TEST(ExtraIdentities, OddN) {
  for (long n = 3; n <= 21; n += 2) {
    const auto [a, b] = extra_ident_check(n);
    EXPECT_EQ(a.verdict, Verdict::Proved) << n;
    EXPECT_EQ(b.verdict, Verdict::Proved) << n;
  }
}
