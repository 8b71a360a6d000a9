#include "trigsum/poly.hpp"

#include <algorithm>
#include <sstream>

#include "trigsum/errors.hpp"

namespace trigsum {

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly(std::vector<BigRational>{c}); }

UniPoly UniPoly::monomial(const BigRational& c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<BigRational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const BigRational& a, const BigRational& b) { return UniPoly(std::vector<BigRational>{b, a}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(); }

const BigRational& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigRational UniPoly::eval(const BigRational& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x.mpq();
    acc += it->mpq();
  }
  return BigRational(std::move(acc));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  const BigRational inv = leading().inverse();
  return *this * inv;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i].mpq() += o.coeffs_[i].mpq();
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i].mpq() -= o.coeffs_[i].mpq();
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x.mpq() *= c.mpq();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  mpq_class tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].mpq().get_mpq_t(), b.coeffs_[j].mpq().get_mpq_t());
      out[i + j] += tmp;
    }
  }
  std::vector<BigRational> coeffs;
  coeffs.reserve(out.size());
  for (auto& c : out) coeffs.emplace_back(std::move(c));
  return UniPoly(std::move(coeffs));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const BigRational mag = c.abs();
    if (c.sign() < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    const bool unit = mag == BigRational(1);
    if (i == 0 || !unit) {
      os << mag;
      if (i > 0) os << '*';
    }
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result = UniPoly::constant(1);
  UniPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

DivRem divrem(const UniPoly& p, const UniPoly& q) {
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (p.degree() < q.degree()) return {UniPoly(), p};
  std::vector<mpq_class> rem;
  rem.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) rem.push_back(c.mpq());
  const int dq = q.degree();
  const mpq_class lead_inv = 1 / q.leading().mpq();
  std::vector<BigRational> quot(static_cast<std::size_t>(p.degree() - dq + 1));
  mpq_class factor, tmp;
  for (int i = p.degree(); i >= dq; --i) {
    auto& top = rem[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    factor = top * lead_inv;
    for (int j = 0; j <= dq; ++j) {
      const auto& qc = q.coeffs()[static_cast<std::size_t>(j)].mpq();
      if (sgn(qc) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), qc.get_mpq_t());
      rem[static_cast<std::size_t>(i - dq + j)] -= tmp;
    }
    quot[static_cast<std::size_t>(i - dq)] = BigRational(factor);
  }
  rem.resize(static_cast<std::size_t>(dq));
  std::vector<BigRational> r;
  r.reserve(rem.size());
  for (auto& c : rem) r.emplace_back(std::move(c));
  return {UniPoly(std::move(quot)), UniPoly(std::move(r))};
}

ExtGcd ext_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  // Invariant: r0 = s0*p + t0*q, r1 = s1*p + t1*q.
  UniPoly r0 = p, r1 = q;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [quot, rem] = divrem(r0, r1);
    UniPoly s2 = s0 - quot * s1;
    UniPoly t2 = t0 - quot * t1;
    r0 = std::move(r1);
    s0 = std::move(s1);
    t0 = std::move(t1);
    // Keep remainders monic so coefficient growth stays in check.
    if (!rem.is_zero()) {
      const BigRational inv = rem.leading().inverse();
      rem *= inv;
      s2 *= inv;
      t2 *= inv;
    }
    r1 = std::move(rem);
    s1 = std::move(s2);
    t1 = std::move(t2);
  }
  const BigRational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly reciprocal(const UniPoly& p) {
  std::vector<BigRational> rev(p.coeffs().rbegin(), p.coeffs().rend());
  return UniPoly(std::move(rev));
}

}  // namespace trigsum
