#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigsum/bigint.hpp"

namespace trigsum {

/// Dense univariate polynomial over the rationals. Coefficient i multiplies
/// x^i; trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coeffs);
  UniPoly(std::initializer_list<BigRational> coeffs) : UniPoly(std::vector<BigRational>(coeffs)) {}

  static UniPoly constant(const BigRational& c);
  /// c * x^degree
  static UniPoly monomial(const BigRational& c, std::size_t degree);
  /// a*x + b
  static UniPoly linear(const BigRational& a, const BigRational& b);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i (zero past the degree).
  BigRational coeff(std::size_t i) const;
  /// Requires a nonzero polynomial.
  const BigRational& leading() const;

  BigRational eval(const BigRational& x) const;
  /// Scales to leading coefficient 1; the zero polynomial stays zero.
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const BigRational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const BigRational& c) { return a *= c; }
  friend UniPoly operator*(const BigRational& c, UniPoly a) { return a *= c; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Expanded form such as "3*x^2-x+1/2".
  std::string to_string(std::string_view var = "x") const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

UniPoly pow(const UniPoly& base, unsigned exponent);

struct DivRem {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division p = q*quotient + remainder, deg(remainder) < deg(q).
/// Throws DivisionByZero for q == 0.
DivRem divrem(const UniPoly& p, const UniPoly& q);

struct ExtGcd {
  UniPoly gcd;  ///< monic
  UniPoly s;
  UniPoly t;
};

/// Extended Euclid: s*p + t*q == gcd with gcd monic. Requires p or q nonzero.
ExtGcd ext_gcd(const UniPoly& p, const UniPoly& q);

/// x^d * p(1/x) for d = deg(p).
UniPoly reciprocal(const UniPoly& p);

}  // namespace trigsum
