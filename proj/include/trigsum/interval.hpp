#pragma once

#include <string>

// gmp.h must precede mpfr.h for the mpq interfaces.
#include "trigsum/bigint.hpp"
#include "trigsum/cyclotomic.hpp"

#include <mpfr.h>

namespace trigsum {

/// Owning MPFR scalar.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec);
  Mpfr(const Mpfr& o);
  Mpfr(Mpfr&& o) noexcept;
  Mpfr& operator=(const Mpfr& o);
  Mpfr& operator=(Mpfr&& o) noexcept;
  ~Mpfr();

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds
/// outward, so the true real value is always enclosed.
class IntervalReal {
 public:
  /// The point interval [0, 0].
  explicit IntervalReal(mpfr_prec_t prec);
  /// Takes ownership of the endpoints; requires lo <= hi.
  IntervalReal(Mpfr lo, Mpfr hi);

  static IntervalReal point(const BigRational& q, mpfr_prec_t prec);
  static IntervalReal pi(mpfr_prec_t prec);
  /// [lo, hi] from doubles (used by tests and bounds); requires lo <= hi.
  static IntervalReal from_bounds(double lo, double hi, mpfr_prec_t prec);

  mpfr_prec_t precision() const noexcept { return lo_.precision(); }
  const Mpfr& lo() const noexcept { return lo_; }
  const Mpfr& hi() const noexcept { return hi_; }

  bool contains_zero() const;
  bool contains(const BigRational& q) const;
  /// Rigorous upper bound on hi - lo.
  Mpfr width() const;
  /// True when width < 2^-bits.
  bool narrower_than_pow2(long bits) const;
  /// max(|lo|, |hi|) as a double (rounded up).
  double magnitude() const;
  double midpoint() const;

  IntervalReal operator-() const;
  friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
  friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
  friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
  /// Throws PoleError if the divisor's enclosure contains zero.
  friend IntervalReal operator/(const IntervalReal& a, const IntervalReal& b);

  /// Short human-readable form "[lo, hi]" with ~20 significant digits.
  std::string to_string() const;

 private:
  Mpfr lo_;
  Mpfr hi_;
};

/// Integer power; handles even powers of sign-straddling intervals tightly.
IntervalReal pow(const IntervalReal& x, long exponent);
/// Throws DomainError when the enclosure is entirely negative.
IntervalReal sqrt(const IntervalReal& x);
/// Enclosure of fn(theta) for a pi-rational angle; poles throw PoleError.
IntervalReal trig_enclosure(TrigFn fn, PiRational theta, mpfr_prec_t prec);

}  // namespace trigsum
