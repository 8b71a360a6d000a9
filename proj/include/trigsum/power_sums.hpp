#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "trigsum/chebyshev.hpp"
#include "trigsum/cyclotomic.hpp"
#include "trigsum/poly.hpp"

namespace trigsum {

/// The eight power-sum families. T/U picks the Chebyshev kind, o/e the
/// denominator pattern, p/n whether sin^(2k) or csc^(2k) is summed:
///   Top, Ton: j*pi/(2n+1),       j = 1..n
///   Tep, Ten: (2j-1)*pi/(4n),    j = 1..n
///   Uop, Uon: j*pi/(2n),         j = 1..n-1
///   Uep, Uen: (2j-1)*pi/(4n+2),  j = 1..n
enum class Family { Top, Ton, Tep, Ten, Uop, Uon, Uep, Uen };

inline constexpr std::array<Family, 8> kAllFamilies = {Family::Top, Family::Ton, Family::Tep, Family::Ten,
                                                      Family::Uop, Family::Uon, Family::Uep, Family::Uen};

std::string_view family_name(Family f);
/// Case-insensitive.
std::optional<Family> parse_family(std::string_view name);
/// True for the csc families (Ton, Ten, Uon, Uen).
bool is_csc_family(Family f);
/// The sin family sharing f's angles (identity on sin families).
Family sin_partner(Family f);

/// Angles of the family at n >= 1 (empty for Uop/Uon at n = 1).
std::vector<PiRational> family_angles(Family f, long n);

/// Polynomial whose roots are the family's sin^2 values (sin families) or
/// csc^2 values (csc families), read off the Chebyshev polynomial.
UniPoly defining_poly(Family f, long n, ChebyshevGen& gen);
UniPoly defining_poly(Family f, long n);

/// e_k of the family's values as an exact polynomial in n, kept as
/// constant * (product of linear factors).
struct SymFunFormula {
  Family family;
  long k;
  BigRational constant;
  UniPoly factor;

  UniPoly expanded() const;
};

SymFunFormula elementary_symmetric(Family f, long k);

/// p_k as a polynomial in n.
struct PowerSumFormula {
  Family family;
  long k;
  UniPoly poly;
};

/// p_1..p_kmax by Newton's identities over the family's e_k polynomials.
std::vector<PowerSumFormula> newton_power_sums(Family f, long k_max);

/// The closed forms for the sin families (linear in n).
PowerSumFormula closed_form_sin(Family f, long k);

/// Largest k for which the sin-family closed form (equivalently the Newton
/// polynomial) gives the true sum at this n: the angles are equally spaced
/// with period N = 2n+1 (Top, Uep) or 2n (Tep, Uop), and the binomial
/// expansion of sin^(2k) aliases once k >= N. Unbounded (nullopt) for the
/// csc families.
std::optional<long> max_valid_k(Family f, long n);

/// Sum of sin^(2k) or csc^(2k) over the family's angles, evaluated term by
/// term in the cyclotomic field.
BigRational family_sum_exact(Family f, long k, long n);
/// Same for k = 1..k_max, sharing one field; element i is k = i + 1.
std::vector<BigRational> family_sums_exact(Family f, long k_max, long n);

struct VietaMismatch {
  long k;
  BigRational from_roots_poly;
  BigRational from_formula;
};

struct VietaReport {
  Family family;
  long n;
  long k_max;
  std::vector<VietaMismatch> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

/// Compares e_k read off defining_poly (Vieta) with elementary_symmetric at n,
/// for k = 0..min(k_max, number of roots).
VietaReport vieta_crosscheck(Family f, long n, long k_max);

}  // namespace trigsum
