#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigsum/bigint.hpp"
#include "trigsum/poly.hpp"

namespace trigsum {

/// The M-th cyclotomic polynomial (monic, degree phi(M)), M >= 1.
UniPoly cyclotomic_polynomial(long M);

/// Euler's totient.
long euler_phi(long M);

/// Order M of the root of unity generating a cyclotomic field. Trig
/// embeddings need i = zeta^(M/4), so `for_trig` insists on 4 | M.
class Conductor {
 public:
  /// Any M >= 1.
  explicit Conductor(long M);
  /// M >= 4 with 4 | M; throws DomainError otherwise.
  static Conductor for_trig(long M);

  long value() const noexcept { return m_; }
  bool supports_trig() const noexcept { return m_ % 4 == 0; }
  friend bool operator==(Conductor, Conductor) = default;

 private:
  long m_;
};

/// The angle a*pi/b. `normalized()` maps a into [0, 2b) and reduces to
/// lowest terms, so two angles that differ by a multiple of 2*pi compare
/// equal after normalization.
struct PiRational {
  long a = 0;
  long b = 1;

  /// The angle q*pi; throws DomainError if q does not fit machine words.
  static PiRational from(const BigRational& q);
  PiRational normalized() const;
  BigRational as_rational() const { return BigRational(BigInteger(a), BigInteger(b)); }
  std::string to_string() const;  ///< "3*pi/7"

  friend bool operator==(const PiRational&, const PiRational&) = default;
  friend auto operator<=>(const PiRational&, const PiRational&) = default;
};

/// Smallest valid trig conductor for an angle: lcm(4, 2b).
long required_conductor(PiRational theta);

enum class TrigFn { Sin, Cos, Tan, Cot, Sec, Csc };

std::string_view trig_name(TrigFn fn);
std::optional<TrigFn> parse_trig_name(std::string_view name);
/// sin <-> csc, cos <-> sec, tan <-> cot.
TrigFn reciprocal_fn(TrigFn fn);

/// Q(zeta_M) presented as Q[z]/Phi_M(z). Immutable; shared by its elements.
class CycloField {
 public:
  explicit CycloField(Conductor conductor);

  Conductor conductor() const noexcept { return conductor_; }
  long order() const noexcept { return conductor_.value(); }
  /// phi(M)
  int degree() const noexcept { return degree_; }
  const UniPoly& modulus() const noexcept { return modulus_; }

  /// Reduces sum_e buf[e] * z^e (buf has exactly M entries, indexed by
  /// exponent mod M) to coefficients of degree < phi(M). Consumes buf.
  UniPoly reduce(std::vector<mpq_class>& buf) const;

 private:
  Conductor conductor_;
  int degree_;
  UniPoly modulus_;
  // Nonzero coefficients of Phi_M below the leading term.
  std::vector<std::pair<int, mpz_class>> tail_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

FieldPtr make_field(long M);

/// Element of a cyclotomic field, always held in reduced form (degree < phi(M)).
class CycloElem {
 public:
  /// Zero of the field.
  explicit CycloElem(FieldPtr field);
  CycloElem(FieldPtr field, const BigRational& value);
  /// Reduces an arbitrary polynomial in z.
  CycloElem(FieldPtr field, const UniPoly& poly);

  /// zeta_M^e for any integer e.
  static CycloElem zeta_power(FieldPtr field, long e);

  const CycloField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  long conductor() const noexcept { return field_->order(); }
  const UniPoly& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.is_zero(); }
  /// The rational value if every positive-degree coefficient vanishes.
  std::optional<BigRational> as_rational() const;

  /// Throws DivisionByZero for the zero element.
  CycloElem inverse() const;

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator*=(const BigRational& c);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(CycloElem a, const BigRational& c) { return a *= c; }
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b);

  friend bool operator==(const CycloElem& a, const CycloElem& b);

  /// Complex value under z -> exp(2*pi*i/M), in double precision.
  std::complex<double> to_complex() const;
  /// Rational value, or the reduced polynomial written in z.
  std::string to_string() const;

 private:
  void require_same_field(const CycloElem& o) const;

  FieldPtr field_;
  UniPoly coeffs_;
};

/// Integer power; negative exponents invert.
CycloElem pow(const CycloElem& base, long exponent);

/// Image of u under zeta_M -> zeta_N^(N/M); requires M | N.
CycloElem lift(const CycloElem& u, const FieldPtr& target);

/// Exact value of fn(theta). Needs lcm(4, 2b) | M; throws PoleError where
/// fn is undefined and DomainError when the conductor is too small.
CycloElem trig_value(TrigFn fn, PiRational theta, const FieldPtr& field);

}  // namespace trigsum
