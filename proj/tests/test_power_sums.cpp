#include <gtest/gtest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "support/properties.hpp"
#include "trigsum/chebyshev.hpp"
#include "trigsum/format.hpp"
#include "trigsum/power_sums.hpp"

using namespace trigsum;
using trigsum::oracle::chebyshev_explicit;
using trigsum::oracle::lemma_factorial;
using trigsum::oracle::theorem_polynomial;

namespace {

BigRational q(long a, long b = 1) { return BigRational(BigInteger(a), BigInteger(b)); }

long root_count(Family f, long n) {
  return (f == Family::Uop || f == Family::Uon) ? n - 1 : n;
}

}  // namespace

TEST(Chebyshev, RecurrenceMatchesExplicitSums) {
  ChebyshevGen gen;
  for (long m = 0; m <= 40; ++m) {
    EXPECT_EQ(gen.get(ChebyshevKind::T, m), chebyshev_explicit(ChebyshevKind::T, m)) << "T_" << m;
    EXPECT_EQ(gen.get(ChebyshevKind::U, m), chebyshev_explicit(ChebyshevKind::U, m)) << "U_" << m;
  }
  EXPECT_EQ(chebyshev(ChebyshevKind::T, 3), (UniPoly{q(0), q(-3), q(0), q(4)}));
}

TEST(Families, NamesAndPartners) {
  EXPECT_EQ(parse_family("ton"), Family::Ton);
  EXPECT_EQ(parse_family("UEN"), Family::Uen);
  EXPECT_FALSE(parse_family("Tx").has_value());
  EXPECT_EQ(sin_partner(Family::Ten), Family::Tep);
  EXPECT_TRUE(is_csc_family(Family::Uon));
  EXPECT_FALSE(is_csc_family(Family::Uop));
  EXPECT_EQ(family_angles(Family::Tep, 2), (std::vector<PiRational>{{1, 8}, {3, 8}}));
  EXPECT_TRUE(family_angles(Family::Uop, 1).empty());
}

TEST(Families, DefiningPolynomialRoots) {
  // T_3(x)/x = 4x^2 - 3, so E_1 = 4x - 3 with root sin^2(pi/3) = 3/4.
  EXPECT_EQ(defining_poly(Family::Top, 1), (UniPoly{q(-3), q(4)}));
  EXPECT_EQ(defining_poly(Family::Ton, 1), (UniPoly{q(4), q(-3)}));
}

TEST(Lemmas, ProductFormsMatchFactorialForms) {
  for (Family f : kAllFamilies) {
    for (long k = 1; k <= 10; ++k) {
      const UniPoly e = elementary_symmetric(f, k).expanded();
      for (long n = 1; n <= 15; ++n) {
        if (k > root_count(f, n)) continue;
        EXPECT_EQ(e.eval(q(n)), lemma_factorial(f, n, k)) << family_name(f) << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Lemmas, ExampleValues) {
  // Top, n = 1: the single root is 3/4.
  EXPECT_EQ(elementary_symmetric(Family::Top, 1).expanded().eval(q(1)), q(3, 4));
  // Ton e_1 = sum csc^2 = 2n(n+1)/3.
  EXPECT_EQ(elementary_symmetric(Family::Ton, 1).expanded(), (UniPoly{q(0), q(2, 3), q(2, 3)}));
}

TEST(Lemmas, VietaCrossCheck) {
  for (Family f : kAllFamilies) {
    for (long n = 1; n <= 10; ++n) {
      const VietaReport r = vieta_crosscheck(f, n, n);
      EXPECT_TRUE(r.passed()) << family_name(f) << " n=" << n << " first bad k=" << r.mismatches.front().k;
    }
  }
}

TEST(PowerSums, BinomialIdentityBehindTheSinTheorems) {
  const auto r = trigsum::oracle::binomial_alternating_identity(200);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(PowerSums, NewtonMatchesCyclotomicSumsForCscFamilies) {
  for (Family f : {Family::Ton, Family::Ten, Family::Uon, Family::Uen}) {
    const auto formulas = newton_power_sums(f, 8);
    for (long n = 1; n <= 12; ++n) {
      const auto sums = family_sums_exact(f, 8, n);
      for (long k = 1; k <= 8; ++k) {
        EXPECT_EQ(formulas[k - 1].poly.eval(q(n)), sums[k - 1]) << family_name(f) << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(PowerSums, NewtonMatchesCyclotomicSumsForSinFamiliesBelowThePeriod) {
  for (Family f : {Family::Top, Family::Tep, Family::Uop, Family::Uep}) {
    const auto formulas = newton_power_sums(f, 8);
    for (long n = 1; n <= 12; ++n) {
      const auto sums = family_sums_exact(f, 8, n);
      for (long k = 1; k <= std::min(8L, *max_valid_k(f, n)); ++k) {
        EXPECT_EQ(formulas[k - 1].poly.eval(q(n)), sums[k - 1]) << family_name(f) << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(PowerSums, SinClosedFormsBreakDownAtThePeriod) {
  // Top, n = 1: the only root is 3/4, so p_3 = 27/64, while the polynomial
  // (k = 3, period 2n+1 = 3) gives 15/32.
  EXPECT_EQ(max_valid_k(Family::Top, 1), 2);
  EXPECT_EQ(family_sum_exact(Family::Top, 3, 1), q(27, 64));
  EXPECT_EQ(closed_form_sin(Family::Top, 3).poly.eval(q(1)), q(15, 32));
  EXPECT_FALSE(max_valid_k(Family::Ton, 1).has_value());
}

TEST(PowerSums, ClosedFormsEqualNewtonAndTheTheorems) {
  for (Family f : {Family::Top, Family::Tep, Family::Uop, Family::Uep}) {
    const auto newton = newton_power_sums(f, 20);
    for (long k = 1; k <= 20; ++k) {
      const UniPoly closed = closed_form_sin(f, k).poly;
      EXPECT_EQ(closed, newton[k - 1].poly) << family_name(f) << " k=" << k;
      EXPECT_EQ(closed, theorem_polynomial(f, k)) << family_name(f) << " k=" << k;
    }
  }
  EXPECT_THROW(closed_form_sin(Family::Ton, 1), std::exception);
}

TEST(PowerSums, FloatingPointSpotChecks) {
  for (Family f : kAllFamilies) {
    const auto formulas = newton_power_sums(f, 4);
    for (long n = 2; n <= 9; ++n) {
      for (long k = 1; k <= std::min(4L, max_valid_k(f, n).value_or(4)); ++k) {
        const double expected = trigsum::oracle::float_family_sum(f, k, n);
        EXPECT_NEAR(formulas[k - 1].poly.eval(q(n)).to_double(), expected, 1e-9 * std::max(1.0, expected))
            << family_name(f) << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(PowerSums, CscPolynomialsCarryTheLinearFactors) {
  const UniPoly n_times_n_plus_1{q(0), q(1), q(1)};
  const UniPoly n_squared_minus_1{q(-1), q(0), q(1)};
  const auto ton = newton_power_sums(Family::Ton, 10);
  const auto uon = newton_power_sums(Family::Uon, 10);
  for (long k = 1; k <= 10; ++k) {
    EXPECT_TRUE(divrem(ton[k - 1].poly, n_times_n_plus_1).remainder.is_zero()) << "Ton k=" << k;
    EXPECT_TRUE(divrem(uon[k - 1].poly, n_squared_minus_1).remainder.is_zero()) << "Uon k=" << k;
    EXPECT_EQ(ton[k - 1].poly.degree(), 2 * k);
    EXPECT_EQ(uon[k - 1].poly.degree(), 2 * k);
  }
}

TEST(PowerSums, EmptySumConvention) {
  for (long k = 1; k <= 4; ++k) {
    EXPECT_EQ(family_sum_exact(Family::Uop, k, 1), q(0));
    EXPECT_EQ(family_sum_exact(Family::Uon, k, 1), q(0));
  }
}

TEST(PowerSums, LargeKStaysExact) {
  const auto uon = newton_power_sums(Family::Uon, 30);
  EXPECT_EQ(uon.back().poly.degree(), 60);
  EXPECT_EQ(uon.back().poly.eval(q(1)), q(0));
  EXPECT_EQ(uon.back().poly.eval(q(5)), family_sum_exact(Family::Uon, 30, 5));
}

TEST(Format, FactoredDisplay) {
  EXPECT_EQ(factored_string(newton_power_sums(Family::Ten, 1).back().poly), "2n^2");
  EXPECT_EQ(factored_string(closed_form_sin(Family::Top, 1).poly), "(2n+1)/4");
  EXPECT_EQ(factored_string(closed_form_sin(Family::Top, 3).poly), "5(2n+1)/32");
  EXPECT_EQ(factored_string(UniPoly{q(-1, 2), q(1, 2)}), "(n-1)/2");
  EXPECT_EQ(factored_string(UniPoly{q(-1), q(0), q(1)}), "(n+1)(n-1)");
  EXPECT_EQ(factored_string(UniPoly{q(-3)}), "-3");
  EXPECT_EQ(factored_string(UniPoly{q(0), q(-2)}), "-2n");
  EXPECT_EQ(factored_string(UniPoly()), "0");
  EXPECT_EQ(compact_poly_string(UniPoly{q(1), q(-1), q(0), q(2)}), "2n^3-n+1");
  const FactoredPoly f = factor_for_display(newton_power_sums(Family::Ten, 2).back().poly);
  EXPECT_EQ(f.at_zero, 2);
  EXPECT_EQ(f.content, q(4, 3));
}
