#pragma once

#include <string>
#include <utility>

#include "trigsum/interval.hpp"
#include "trigsum/verify.hpp"

namespace trigsum {

/// 1 if m is odd, else 0.
int chi_odd(long m);

/// S_n(x): signed count over 0 <= r < x, n | r, of (-1)^(base-(n-1) digit sum of r).
struct ShevelevReport {
  long n = 0;
  long p = 0;
  BigInteger digit_count;      ///< S_n((n-1)^(2p)) by enumeration
  BigRational tangent_side;    ///< (2/n) sum_{k=1}^{(n-1)/2} tan^(2p)(k pi/n), exact
  bool equal = false;
  double lambda = 0;           ///< log cot(pi/2n) / log(n-1)
  double raw_ratio = 0;        ///< log(S) / (2p log(n-1))
  double normalized_ratio = 0; ///< log((n/2) S) / (2p log(n-1)), which drops the 2/n prefactor
};

/// n odd >= 3, p >= 1; throws BudgetExceeded when (n-1)^(2p) > budget.
ShevelevReport shevelev_check(long n, long p, long budget = 10'000'000);

/// Enclosure check of sum_{m>0, N !| m} cot^2(m pi/N)/m^2 against
/// (N-1)(N-2)(N^2+3N+2) pi^2 / (90 N^2). The truncated sum P over m <= T
/// bounds the series below; the tail is at most cot^2(pi/N)/T.
struct FrankeReport {
  long N = 0;
  long terms = 0;               ///< T
  std::string partial;          ///< enclosure of P
  double tail_bound = 0;
  std::string closed_form;      ///< enclosure of the closed form
  double closed_form_value = 0;
  double partial_value = 0;
  bool enclosed = false;        ///< closed form inside [P.lo, P.hi + tail]
};

/// N >= 3. T doubles from 1024 until tail <= rel_tol * closed form (or max_terms).
FrankeReport franke_check(long N, long precision_bits = 128, double rel_tol = 1e-5, long max_terms = 1L << 22);

/// The two alternating sin^2 sums in closed form, verified exactly at k >= 1:
///   sum_{j=0}^{2k-1} (-1)^j sin^2((2j+1)pi/(8k+2)) = -sin^2(2k pi/(4k+1)) / (2 cos(pi/(4k+1)))
///   sum_{j=0}^{2k}   (-1)^j sin^2((2j+1)pi/(8k+6)) = 1/2 - cos^2((2k+1)pi/(4k+3)) / (2 cos(pi/(4k+3)))
std::pair<VerifyReport, VerifyReport> conjecture_closed_forms(long k);

/// Left-hand sums of conjecture_closed_forms at k (which = 1 or 2), enclosed
/// numerically; the limits as k grows are -1/2 and +1/2.
IntervalReal conjecture_sum_enclosure(int which, long k, long precision_bits = 128);

/// For odd n >= 3:
///   sum_{k=1}^{(n-1)/2} (-1)^(k+1) sin(2k pi/n)/sin(k pi/n) = 1
///   sum_{k=1}^{(n-1)/2} (-1)^(k+1) sin(k pi/n)/sin(2k pi/n) = (-1)^((n+1)/2) (n-1)/4 + chi_odd((n-1)/2)/2
std::pair<VerifyReport, VerifyReport> extra_ident_check(long n);

}  // namespace trigsum
