#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace trigsum {

/// Arbitrary precision signed integer (thin value wrapper over GMP).
class BigInteger {
 public:
  BigInteger() = default;
  template <std::signed_integral T>
  BigInteger(T v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit by design of arithmetic types
  template <std::unsigned_integral T>
  BigInteger(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT
  explicit BigInteger(mpz_class v) : v_(std::move(v)) {}
  /// Parses an optionally signed decimal string; throws DomainError on junk.
  explicit BigInteger(std::string_view decimal);

  const mpz_class& mpz() const noexcept { return v_; }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool fits_long() const noexcept { return v_.fits_slong_p(); }
  /// Throws DomainError when the value does not fit.
  long to_long() const;
  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }

  BigInteger abs() const { return BigInteger(mpz_class(::abs(v_))); }
  BigInteger operator-() const { return BigInteger(mpz_class(-v_)); }

  BigInteger& operator+=(const BigInteger& o) { v_ += o.v_; return *this; }
  BigInteger& operator-=(const BigInteger& o) { v_ -= o.v_; return *this; }
  BigInteger& operator*=(const BigInteger& o) { v_ *= o.v_; return *this; }

  friend BigInteger operator+(const BigInteger& a, const BigInteger& b) { return BigInteger(mpz_class(a.v_ + b.v_)); }
  friend BigInteger operator-(const BigInteger& a, const BigInteger& b) { return BigInteger(mpz_class(a.v_ - b.v_)); }
  friend BigInteger operator*(const BigInteger& a, const BigInteger& b) { return BigInteger(mpz_class(a.v_ * b.v_)); }
  /// Truncating division; throws DivisionByZero.
  friend BigInteger operator/(const BigInteger& a, const BigInteger& b);
  friend BigInteger operator%(const BigInteger& a, const BigInteger& b);

  friend bool operator==(const BigInteger& a, const BigInteger& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInteger& a, const BigInteger& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInteger& v) { return os << v.v_.get_str(); }

 private:
  mpz_class v_;
};

BigInteger gcd(const BigInteger& a, const BigInteger& b);
BigInteger lcm(const BigInteger& a, const BigInteger& b);
BigInteger pow(const BigInteger& base, unsigned long exponent);
/// n! for n >= 0.
BigInteger factorial(long n);
/// Binomial coefficient (m choose r); requires 0 <= r <= m.
BigInteger binomial(long m, long r);

/// Exact rational number kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  template <std::integral T>
  BigRational(T v) : v_(BigInteger(v).mpz()) {}  // NOLINT
  BigRational(const BigInteger& v) : v_(v.mpz()) {}  // NOLINT
  /// num/den; throws DivisionByZero when den == 0.
  BigRational(const BigInteger& num, const BigInteger& den);
  explicit BigRational(mpq_class v);
  /// Parses "p" or "p/q".
  explicit BigRational(std::string_view text);

  const mpq_class& mpq() const noexcept { return v_; }
  mpq_class& mpq() noexcept { return v_; }

  BigInteger num() const { return BigInteger(mpz_class(v_.get_num())); }
  BigInteger den() const { return BigInteger(mpz_class(v_.get_den())); }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_integer() const noexcept { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }
  double to_double() const { return v_.get_d(); }
  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const { return v_.get_str(); }
  /// Always "p/q", including "0/1" and "5/1".
  std::string to_fraction_string() const;

  BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }
  /// Throws DivisionByZero for zero.
  BigRational inverse() const;
  BigRational operator-() const { return BigRational(mpq_class(-v_)); }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ + b.v_)); }
  friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ - b.v_)); }
  friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ * b.v_)); }
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.v_.get_str(); }

 private:
  mpq_class v_;
};

/// base^exponent; negative exponents invert (zero base throws DivisionByZero).
BigRational pow(const BigRational& base, long exponent);

}  // namespace trigsum
