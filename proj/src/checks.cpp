#include "trigsum/checks.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "trigsum/errors.hpp"
#include "trigsum/parser.hpp"

namespace trigsum {

int chi_odd(long m) { return (m % 2 != 0) ? 1 : 0; }

namespace {

void require_odd_at_least_3(long n, const char* what) {
  if (n < 3 || n % 2 == 0) throw DomainError(std::string(what) + " needs odd n >= 3, got " + std::to_string(n));
}

// Signed digit-sum count over multiples of n below x, in base n-1. Adding n
// is adding the two-digit numeral "11", so digits are updated with carries
// rather than recomputed.
long signed_multiple_count(long n, long x) {
  const long base = n - 1;
  std::vector<long> digits(2, 0);
  long digit_sum = 0;
  auto bump = [&](std::size_t pos) {
    for (;;) {
      if (pos == digits.size()) digits.push_back(0);
      ++digits[pos];
      ++digit_sum;
      if (digits[pos] < base) return;
      digits[pos] = 0;
      digit_sum -= base;
      ++pos;
    }
  };
  long count = 0;
  for (long r = 0; r < x; r += n) {
    count += (digit_sum % 2 == 0) ? 1 : -1;
    bump(0);
    bump(1);
  }
  return count;
}

}  // namespace

ShevelevReport shevelev_check(long n, long p, long budget) {
  require_odd_at_least_3(n, "shevelev_check");
  if (p < 1) throw DomainError("shevelev_check needs p >= 1");
  const BigInteger limit = pow(BigInteger(n - 1), static_cast<unsigned long>(2 * p));
  if (limit > BigInteger(budget)) {
    throw BudgetExceeded("(n-1)^(2p) = " + limit.to_string() + " exceeds the enumeration budget " +
                         std::to_string(budget));
  }
  ShevelevReport r;
  r.n = n;
  r.p = p;
  r.digit_count = BigInteger(signed_multiple_count(n, limit.to_long()));

  static const ExprPtr tangent = parse("2/n*sum(k=1..(n-1)/2, tan(k*pi/n)^(2*p))");
  const auto value = eval_exact(*tangent, {{"n", n}, {"p", p}}).as_rational();
  if (!value) throw Error("internal: scaled tangent power sum is not rational");
  r.tangent_side = *value;
  r.equal = BigRational(r.digit_count) == r.tangent_side;

  const double log_base = std::log(static_cast<double>(n - 1));
  const double s = r.tangent_side.to_double();
  r.lambda = std::log(1.0 / std::tan(std::numbers::pi / (2.0 * static_cast<double>(n)))) / log_base;
  r.raw_ratio = std::log(s) / (2.0 * static_cast<double>(p) * log_base);
  r.normalized_ratio = std::log(s * static_cast<double>(n) / 2.0) / (2.0 * static_cast<double>(p) * log_base);
  return r;
}

FrankeReport franke_check(long N, long precision_bits, double rel_tol, long max_terms) {
  if (N < 3) throw DomainError("franke_check needs N >= 3");
  const auto prec = static_cast<mpfr_prec_t>(precision_bits);
  FrankeReport rep;
  rep.N = N;

  // cot^2(r pi / N) for r = 1..N-1; cot^2 is N-periodic in m.
  std::vector<IntervalReal> cot2;
  cot2.reserve(static_cast<std::size_t>(N));
  cot2.emplace_back(prec);
  for (long r = 1; r < N; ++r) cot2.push_back(pow(trig_enclosure(TrigFn::Cot, PiRational{r, N}, prec), 2));

  const BigRational poly(BigInteger((N - 1) * (N - 2)) * BigInteger(N * N + 3 * N + 2), BigInteger(90 * N * N));
  const IntervalReal pi = IntervalReal::pi(prec);
  const IntervalReal closed = IntervalReal::point(poly, prec) * pi * pi;
  rep.closed_form = closed.to_string();
  rep.closed_form_value = closed.midpoint();

  // Per-residue sums of 1/m^2, extended as T grows.
  std::vector<IntervalReal> harmonic(static_cast<std::size_t>(N), IntervalReal(prec));
  long done = 0;
  long T = 1024;
  for (;;) {
    for (long m = done + 1; m <= T; ++m) {
      if (m % N == 0) continue;
      auto& h = harmonic[static_cast<std::size_t>(m % N)];
      h = h + IntervalReal::point(BigRational(BigInteger(1), BigInteger(m) * BigInteger(m)), prec);
    }
    done = T;
    IntervalReal partial(prec);
    for (long r = 1; r < N; ++r) partial = partial + cot2[static_cast<std::size_t>(r)] * harmonic[static_cast<std::size_t>(r)];
    // sum_{m > T} 1/m^2 < 1/T, and cot^2 is largest at r = 1.
    const IntervalReal tail = cot2[1] / IntervalReal::point(BigRational(T), prec);
    rep.terms = T;
    rep.partial = partial.to_string();
    rep.partial_value = partial.midpoint();
    rep.tail_bound = mpfr_get_d(tail.hi().get(), MPFR_RNDU);
    const bool converged = rep.tail_bound <= rel_tol * rep.closed_form_value;
    if (converged || 2 * T > max_terms) {
      const IntervalReal upper = partial + tail;
      rep.enclosed = mpfr_cmp(closed.lo().get(), partial.lo().get()) >= 0 &&
                     mpfr_cmp(closed.hi().get(), upper.hi().get()) <= 0;
      return rep;
    }
    T *= 2;
  }
}

namespace {

struct ConjectureForms {
  std::pair<ExprPtr, ExprPtr> first;
  std::pair<ExprPtr, ExprPtr> second;
};

const ConjectureForms& conjecture_forms() {
  static const ConjectureForms forms{
      parse_identity("sum(j=0..2*k-1, (-1)^j*sin((2*j+1)*pi/(8*k+2))^2) = "
                     "-sin(2*k*pi/(4*k+1))^2/(2*cos(pi/(4*k+1)))"),
      parse_identity("sum(j=0..2*k, (-1)^j*sin((2*j+1)*pi/(8*k+6))^2) = "
                     "1/2 - cos((2*k+1)*pi/(4*k+3))^2/(2*cos(pi/(4*k+3)))"),
  };
  return forms;
}

}  // namespace

std::pair<VerifyReport, VerifyReport> conjecture_closed_forms(long k) {
  if (k < 1) throw DomainError("conjecture closed forms need k >= 1");
  const auto& f = conjecture_forms();
  const ParamBinding b{{"k", k}};
  return {verify(f.first.first, f.first.second, b), verify(f.second.first, f.second.second, b)};
}

IntervalReal conjecture_sum_enclosure(int which, long k, long precision_bits) {
  if (which != 1 && which != 2) throw DomainError("conjecture index must be 1 or 2");
  if (k < 1) throw DomainError("conjecture sums need k >= 1");
  const auto& f = conjecture_forms();
  const ExprPtr& lhs = which == 1 ? f.first.first : f.second.first;
  return eval_interval(*lhs, {{"k", k}}, precision_bits);
}

std::pair<VerifyReport, VerifyReport> extra_ident_check(long n) {
  require_odd_at_least_3(n, "extra_ident_check");
  static const ExprPtr first = parse("sum(k=1..(n-1)/2, (-1)^(k+1)*sin(2*k*pi/n)/sin(k*pi/n))");
  static const ExprPtr second = parse("sum(k=1..(n-1)/2, (-1)^(k+1)*sin(k*pi/n)/sin(2*k*pi/n))");
  const long half = (n - 1) / 2;
  const long sign = ((n + 1) / 2) % 2 == 0 ? 1 : -1;
  const BigRational rhs2 = BigRational(sign * (n - 1), 4) + BigRational(chi_odd(half), 2);
  const ParamBinding b{{"n", n}};
  return {verify(first, num(BigRational(1)), b), verify(second, num(rhs2), b)};
}

}  // namespace trigsum
