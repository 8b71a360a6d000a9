#include "trigsum/bigint.hpp"

#include <cctype>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigInteger::BigInteger(std::string_view decimal) {
  if (!is_decimal(decimal)) throw DomainError("not a decimal integer: '" + std::string(decimal) + "'");
  if (decimal[0] == '+') decimal.remove_prefix(1);
  v_.set_str(std::string(decimal), 10);
}

long BigInteger::to_long() const {
  if (!fits_long()) throw DomainError("integer does not fit in a machine word: " + to_string());
  return v_.get_si();
}

BigInteger operator/(const BigInteger& a, const BigInteger& b) {
  if (b.is_zero()) throw DivisionByZero("integer division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInteger(std::move(q));
}

BigInteger operator%(const BigInteger& a, const BigInteger& b) {
  if (b.is_zero()) throw DivisionByZero("integer remainder by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInteger(std::move(r));
}

BigInteger gcd(const BigInteger& a, const BigInteger& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInteger(std::move(g));
}

BigInteger lcm(const BigInteger& a, const BigInteger& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInteger(std::move(l));
}

BigInteger pow(const BigInteger& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return BigInteger(std::move(r));
}

BigInteger factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  mpz_class acc = 1;
  for (long i = 2; i <= n; ++i) acc *= static_cast<unsigned long>(i);
  return BigInteger(std::move(acc));
}

BigInteger binomial(long m, long r) {
  if (r < 0 || m < 0 || r > m) {
    throw DomainError("binomial(" + std::to_string(m) + ", " + std::to_string(r) + ") out of range");
  }
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  return BigInteger(std::move(b));
}

BigRational::BigRational(const BigInteger& num, const BigInteger& den) {
  if (den.is_zero()) throw DivisionByZero("rational with zero denominator");
  v_.get_num() = num.mpz();
  v_.get_den() = den.mpz();
  v_.canonicalize();
}

BigRational::BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

BigRational::BigRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    v_ = BigInteger(text).mpz();
    return;
  }
  *this = BigRational(BigInteger(text.substr(0, slash)), BigInteger(text.substr(slash + 1)));
}

std::string BigRational::to_fraction_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return BigRational(std::move(r));
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  BigRational r = a;
  r /= b;
  return r;
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.mpq().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), base.mpq().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(std::move(r));
}

}  // namespace trigsum
