#include "trigsum/power_sums.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

void require_n(long n) {
  if (n < 1) throw DomainError("family parameter n must be >= 1, got " + std::to_string(n));
}

void require_k(long k, long min) {
  if (k < min) throw DomainError("power index k must be >= " + std::to_string(min) + ", got " + std::to_string(k));
}

// prod_{s=lo}^{hi} (alpha*n + beta*s); empty product is 1.
UniPoly linear_product(long alpha, long beta, long lo, long hi) {
  UniPoly acc = UniPoly::constant(BigRational(1));
  for (long s = lo; s <= hi; ++s) acc = acc * UniPoly::linear(BigRational(alpha), BigRational(beta * s));
  return acc;
}

BigRational quarter_pow(long k) { return pow(BigRational(4), -k); }

// Keeps the coefficients of x^(parity + 2i), i.e. P(sqrt x) / sqrt(x)^parity.
UniPoly even_part(const UniPoly& p, int parity) {
  std::vector<BigRational> out;
  for (int i = parity; i <= p.degree(); i += 2) out.push_back(p.coeff(static_cast<std::size_t>(i)));
  return UniPoly(std::move(out));
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Top: return "Top";
    case Family::Ton: return "Ton";
    case Family::Tep: return "Tep";
    case Family::Ten: return "Ten";
    case Family::Uop: return "Uop";
    case Family::Uon: return "Uon";
    case Family::Uep: return "Uep";
    case Family::Uen: return "Uen";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Family f : kAllFamilies) {
    std::string candidate(family_name(f));
    std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (candidate == lower) return f;
  }
  return std::nullopt;
}

bool is_csc_family(Family f) {
  return f == Family::Ton || f == Family::Ten || f == Family::Uon || f == Family::Uen;
}

Family sin_partner(Family f) {
  switch (f) {
    case Family::Ton: return Family::Top;
    case Family::Ten: return Family::Tep;
    case Family::Uon: return Family::Uop;
    case Family::Uen: return Family::Uep;
    default: return f;
  }
}

std::vector<PiRational> family_angles(Family f, long n) {
  require_n(n);
  std::vector<PiRational> out;
  switch (sin_partner(f)) {
    case Family::Top:
      for (long j = 1; j <= n; ++j) out.push_back({j, 2 * n + 1});
      break;
    case Family::Tep:
      for (long j = 1; j <= n; ++j) out.push_back({2 * j - 1, 4 * n});
      break;
    case Family::Uop:
      for (long j = 1; j <= n - 1; ++j) out.push_back({j, 2 * n});
      break;
    default:
      for (long j = 1; j <= n; ++j) out.push_back({2 * j - 1, 4 * n + 2});
      break;
  }
  for (auto& a : out) a = a.normalized();
  return out;
}

UniPoly defining_poly(Family f, long n, ChebyshevGen& gen) {
  require_n(n);
  UniPoly roots_sin2;
  switch (sin_partner(f)) {
    case Family::Top: roots_sin2 = even_part(gen.get(ChebyshevKind::T, 2 * n + 1), 1); break;
    case Family::Tep: roots_sin2 = even_part(gen.get(ChebyshevKind::T, 2 * n), 0); break;
    case Family::Uop: roots_sin2 = even_part(gen.get(ChebyshevKind::U, 2 * n - 1), 1); break;
    default: roots_sin2 = even_part(gen.get(ChebyshevKind::U, 2 * n), 0); break;
  }
  // The roots are cos^2 of the Chebyshev zeros, which as a set coincide
  // with the family's sin^2 values.
  return is_csc_family(f) ? reciprocal(roots_sin2) : roots_sin2;
}

UniPoly defining_poly(Family f, long n) {
  ChebyshevGen gen;
  return defining_poly(f, n, gen);
}

UniPoly SymFunFormula::expanded() const {
  UniPoly out = factor;
  out *= constant;
  return out;
}

SymFunFormula elementary_symmetric(Family f, long k) {
  require_k(k, 0);
  SymFunFormula out{f, k, BigRational(1), UniPoly::constant(BigRational(1))};
  if (k == 0) return out;
  const BigRational k_fact(factorial(k));
  const BigRational four_k = pow(BigRational(4), k);
  switch (f) {
    case Family::Top:
      out.constant = quarter_pow(k) / k_fact;
      out.factor = UniPoly::linear(BigRational(2), BigRational(1)) * linear_product(2, -1, k, 2 * k - 2);
      break;
    case Family::Ton:
      out.constant = four_k / BigRational(factorial(2 * k + 1));
      out.factor = linear_product(1, 1, -k + 1, k);
      break;
    case Family::Tep:
      out.constant = quarter_pow(k) / k_fact;
      out.factor = UniPoly::monomial(BigRational(2), 1) * linear_product(2, -1, k + 1, 2 * k - 1);
      break;
    case Family::Ten:
      out.constant = four_k / BigRational(factorial(2 * k));
      out.factor = UniPoly::monomial(BigRational(1), 1) * linear_product(1, 1, -k + 1, k - 1);
      break;
    case Family::Uop:
      out.constant = quarter_pow(k) / k_fact;
      out.factor = linear_product(2, -1, k + 1, 2 * k);
      break;
    case Family::Uon:
      out.constant = four_k / BigRational(factorial(2 * k + 1));
      out.factor = linear_product(1, 1, 1, k) * linear_product(1, -1, 1, k);
      break;
    case Family::Uep:
      out.constant = quarter_pow(k) / k_fact;
      out.factor = linear_product(2, -1, k, 2 * k - 1);
      break;
    case Family::Uen:
      out.constant = four_k / BigRational(factorial(2 * k));
      out.factor = linear_product(1, 1, -k + 1, k);
      break;
  }
  return out;
}

std::vector<PowerSumFormula> newton_power_sums(Family f, long k_max) {
  require_k(k_max, 1);
  std::vector<UniPoly> e;  // e[i] = e_i
  e.reserve(static_cast<std::size_t>(k_max) + 1);
  for (long i = 0; i <= k_max; ++i) e.push_back(elementary_symmetric(f, i).expanded());
  std::vector<UniPoly> p(static_cast<std::size_t>(k_max) + 1);  // p[0] unused
  std::vector<PowerSumFormula> out;
  out.reserve(static_cast<std::size_t>(k_max));
  for (long k = 1; k <= k_max; ++k) {
    // p_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k
    UniPoly acc = e[static_cast<std::size_t>(k)];
    acc *= BigRational(k % 2 == 1 ? k : -k);
    for (long i = 1; i < k; ++i) {
      UniPoly term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[static_cast<std::size_t>(k)] = acc;
    out.push_back({f, k, std::move(acc)});
  }
  return out;
}

PowerSumFormula closed_form_sin(Family f, long k) {
  require_k(k, 1);
  if (is_csc_family(f)) throw DomainError(std::string(family_name(f)) + " has no linear closed form");
  const BigRational central = BigRational(binomial(2 * k, k)) * quarter_pow(k);  // C(2k,k)/4^k
  const BigRational half(1, 2);
  UniPoly poly;
  switch (f) {
    case Family::Top:
      // C(2k,k)/4^k * (n + 1/2)
      poly = UniPoly::linear(central, central * half);
      break;
    case Family::Tep:
      // n/2^(2k-1) * (2k-1)!/((k-1)! k!) = n * C(2k-1, k) / 2^(2k-1)
      poly = UniPoly::monomial(BigRational(binomial(2 * k - 1, k)) * pow(BigRational(2), -(2 * k - 1)), 1);
      break;
    case Family::Uop:
      poly = UniPoly::linear(central, -half);
      break;
    default:
      // n C(2k,k)/4^k + (2k-1)!/(4^k k! (k-1)!) - 1/2; the middle term is C(2k-1,k)/4^k
      poly = UniPoly::linear(central, BigRational(binomial(2 * k - 1, k)) * quarter_pow(k) - half);
      break;
  }
  return {f, k, std::move(poly)};
}

std::optional<long> max_valid_k(Family f, long n) {
  require_n(n);
  switch (f) {
    case Family::Top:
    case Family::Uep: return 2 * n;
    case Family::Tep:
    case Family::Uop: return 2 * n - 1;
    default: return std::nullopt;
  }
}

std::vector<BigRational> family_sums_exact(Family f, long k_max, long n) {
  require_k(k_max, 1);
  const std::vector<PiRational> angles = family_angles(f, n);
  std::vector<BigRational> out(static_cast<std::size_t>(k_max), BigRational(0));
  if (angles.empty()) return out;
  long M = 4;
  for (const auto& a : angles) M = std::lcm(M, required_conductor(a));
  const FieldPtr field = make_field(M);
  const TrigFn fn = is_csc_family(f) ? TrigFn::Csc : TrigFn::Sin;
  std::vector<CycloElem> sums(static_cast<std::size_t>(k_max), CycloElem(field));
  for (const auto& a : angles) {
    const CycloElem v = trig_value(fn, a, field);
    const CycloElem sq = v * v;
    CycloElem power = sq;
    for (long k = 1; k <= k_max; ++k) {
      sums[static_cast<std::size_t>(k - 1)] += power;
      if (k < k_max) power *= sq;
    }
  }
  for (long k = 1; k <= k_max; ++k) {
    auto q = sums[static_cast<std::size_t>(k - 1)].as_rational();
    if (!q) {
      throw Error("internal: " + std::string(family_name(f)) + " power sum at n=" + std::to_string(n) +
                  ", k=" + std::to_string(k) + " is not rational");
    }
    out[static_cast<std::size_t>(k - 1)] = *q;
  }
  return out;
}

BigRational family_sum_exact(Family f, long k, long n) { return family_sums_exact(f, k, n).back(); }

VietaReport vieta_crosscheck(Family f, long n, long k_max) {
  require_k(k_max, 0);
  VietaReport report{f, n, k_max, {}};
  const UniPoly poly = defining_poly(f, n);
  const long d = poly.degree();
  const BigRational lead = poly.leading();
  for (long k = 0; k <= std::min(k_max, d); ++k) {
    BigRational from_roots = poly.coeff(static_cast<std::size_t>(d - k)) / lead;
    if (k % 2 == 1) from_roots = -from_roots;
    const BigRational from_formula = elementary_symmetric(f, k).expanded().eval(BigRational(n));
    if (from_roots != from_formula) report.mismatches.push_back({k, from_roots, from_formula});
  }
  return report;
}

}  // namespace trigsum
