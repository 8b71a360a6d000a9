#include "trigsum/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

long positive_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

// Moebius function by trial division; M stays small (a few thousand at most).
int moebius(long m) {
  int result = 1;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  if (m > 1) result = -result;
  return result;
}

using IntPoly = std::vector<mpz_class>;

IntPoly times_binomial(const IntPoly& p, long d) {
  // p * (x^d - 1)
  IntPoly out(p.size() + static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + static_cast<std::size_t>(d)] += p[i];
    out[i] -= p[i];
  }
  return out;
}

IntPoly exact_div_binomial(const IntPoly& p, long d) {
  // p = q * (x^d - 1)  =>  q_i = p_{i+d} + q_{i+d}
  const auto du = static_cast<std::size_t>(d);
  if (p.size() <= du) throw Error("internal: cyclotomic division by a higher-degree binomial");
  IntPoly q(p.size() - du);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = p[i + du];
    if (i + du < q.size()) q[i] += q[i + du];
  }
  // The low coefficients of q * (x^d - 1) are -q_i (zero past the end of q).
  for (std::size_t i = 0; i < du; ++i) {
    const mpz_class back = i < q.size() ? mpz_class(-q[i]) : mpz_class(0);
    if (back != p[i]) throw Error("internal: cyclotomic division left a remainder");
  }
  return q;
}

}  // namespace

long euler_phi(long M) {
  if (M < 1) throw DomainError("euler_phi needs a positive argument");
  long result = M;
  long m = M;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

UniPoly cyclotomic_polynomial(long M) {
  if (M < 1) throw DomainError("cyclotomic polynomial needs M >= 1");
  // Phi_M = prod_{d | M} (x^d - 1)^mu(M/d)
  IntPoly acc{1};
  std::vector<long> divide_by;
  for (long d = 1; d <= M; ++d) {
    if (M % d != 0) continue;
    const int mu = moebius(M / d);
    if (mu == 1) acc = times_binomial(acc, d);
    if (mu == -1) divide_by.push_back(d);
  }
  for (long d : divide_by) acc = exact_div_binomial(acc, d);
  std::vector<BigRational> coeffs;
  coeffs.reserve(acc.size());
  for (auto& c : acc) coeffs.emplace_back(BigInteger(std::move(c)));
  return UniPoly(std::move(coeffs));
}

Conductor::Conductor(long M) : m_(M) {
  if (M < 1) throw DomainError("conductor must be positive, got " + std::to_string(M));
}

Conductor Conductor::for_trig(long M) {
  if (M < 4 || M % 4 != 0) {
    throw DomainError("trig conductor must be a positive multiple of 4, got " + std::to_string(M));
  }
  return Conductor(M);
}

PiRational PiRational::from(const BigRational& q) {
  const BigInteger num = q.num();
  const BigInteger den = q.den();
  if (!num.fits_long() || !den.fits_long()) throw DomainError("angle " + q.to_string() + "*pi is too large");
  return PiRational{num.to_long(), den.to_long()};
}

PiRational PiRational::normalized() const {
  if (b == 0) throw DomainError("angle with zero denominator");
  long num = a, den = b;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = positive_mod(num, 2 * den);
  const long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return PiRational{num, den};
}

std::string PiRational::to_string() const {
  if (a == 0) return "0";
  std::string s = (a == 1) ? "pi" : (a == -1) ? "-pi" : std::to_string(a) + "*pi";
  if (b != 1) s += "/" + std::to_string(b);
  return s;
}

long required_conductor(PiRational theta) {
  const PiRational t = theta.normalized();
  return std::lcm(4L, 2 * t.b);
}

std::string_view trig_name(TrigFn fn) {
  switch (fn) {
    case TrigFn::Sin: return "sin";
    case TrigFn::Cos: return "cos";
    case TrigFn::Tan: return "tan";
    case TrigFn::Cot: return "cot";
    case TrigFn::Sec: return "sec";
    case TrigFn::Csc: return "csc";
  }
  return "?";
}

std::optional<TrigFn> parse_trig_name(std::string_view name) {
  for (TrigFn fn : {TrigFn::Sin, TrigFn::Cos, TrigFn::Tan, TrigFn::Cot, TrigFn::Sec, TrigFn::Csc}) {
    if (trig_name(fn) == name) return fn;
  }
  return std::nullopt;
}

TrigFn reciprocal_fn(TrigFn fn) {
  switch (fn) {
    case TrigFn::Sin: return TrigFn::Csc;
    case TrigFn::Csc: return TrigFn::Sin;
    case TrigFn::Cos: return TrigFn::Sec;
    case TrigFn::Sec: return TrigFn::Cos;
    case TrigFn::Tan: return TrigFn::Cot;
    case TrigFn::Cot: return TrigFn::Tan;
  }
  return fn;
}

CycloField::CycloField(Conductor conductor)
    : conductor_(conductor),
      degree_(static_cast<int>(euler_phi(conductor.value()))),
      modulus_(cyclotomic_polynomial(conductor.value())) {
  for (int t = 0; t < degree_; ++t) {
    const auto& c = modulus_.coeffs()[static_cast<std::size_t>(t)];
    if (!c.is_zero()) tail_.emplace_back(t, mpz_class(c.mpq().get_num()));
  }
}

UniPoly CycloField::reduce(std::vector<mpq_class>& buf) const {
  const long M = order();
  if (static_cast<long>(buf.size()) != M) throw Error("internal: reduction buffer has the wrong size");
  // z^e = -sum_t tail_t z^(e - phi + t) for e >= phi.
  mpq_class tmp;
  for (long e = M - 1; e >= degree_; --e) {
    auto& top = buf[static_cast<std::size_t>(e)];
    if (sgn(top) == 0) continue;
    for (const auto& [t, c] : tail_) {
      tmp = top * c;
      buf[static_cast<std::size_t>(e - degree_ + t)] -= tmp;
    }
    top = 0;
  }
  std::vector<BigRational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) coeffs.emplace_back(std::move(buf[static_cast<std::size_t>(i)]));
  return UniPoly(std::move(coeffs));
}

FieldPtr make_field(long M) { return std::make_shared<const CycloField>(Conductor(M)); }

namespace {

UniPoly reduce_poly(const CycloField& f, const UniPoly& p) {
  if (p.degree() < f.degree()) return p;
  std::vector<mpq_class> buf(static_cast<std::size_t>(f.order()));
  const long M = f.order();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    buf[static_cast<std::size_t>(static_cast<long>(i) % M)] += p.coeffs()[i].mpq();
  }
  return f.reduce(buf);
}

}  // namespace

CycloElem::CycloElem(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw DomainError("null cyclotomic field");
}

CycloElem::CycloElem(FieldPtr field, const BigRational& value) : CycloElem(std::move(field)) {
  coeffs_ = UniPoly::constant(value);
}

CycloElem::CycloElem(FieldPtr field, const UniPoly& poly) : CycloElem(std::move(field)) {
  coeffs_ = reduce_poly(*field_, poly);
}

CycloElem CycloElem::zeta_power(FieldPtr field, long e) {
  CycloElem r(std::move(field));
  const long M = r.field_->order();
  std::vector<mpq_class> buf(static_cast<std::size_t>(M));
  buf[static_cast<std::size_t>(positive_mod(e, M))] = 1;
  r.coeffs_ = r.field_->reduce(buf);
  return r;
}

std::optional<BigRational> CycloElem::as_rational() const {
  if (coeffs_.degree() > 0) return std::nullopt;
  return coeffs_.coeff(0);
}

void CycloElem::require_same_field(const CycloElem& o) const {
  if (field_->order() != o.field_->order()) {
    throw FieldMismatch("operands in Q(zeta_" + std::to_string(field_->order()) + ") and Q(zeta_" +
                        std::to_string(o.field_->order()) + "); lift to a common conductor first");
  }
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero field element");
  if (coeffs_.degree() == 0) return CycloElem(field_, coeffs_.leading().inverse());
  ExtGcd g = ext_gcd(coeffs_, field_->modulus());
  if (g.gcd.degree() != 0) throw Error("internal: cyclotomic modulus is not coprime to a nonzero element");
  CycloElem r(field_);
  r.coeffs_ = reduce_poly(*field_, divrem(g.s, field_->modulus()).remainder);
  return r;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  r.coeffs_ = -coeffs_;
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  require_same_field(o);
  coeffs_ += o.coeffs_;
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  require_same_field(o);
  coeffs_ -= o.coeffs_;
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  *this = *this * o;
  return *this;
}

CycloElem& CycloElem::operator*=(const BigRational& c) {
  coeffs_ *= c;
  return *this;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  a.require_same_field(b);
  CycloElem r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.coeffs_.degree() == 0) {
    r.coeffs_ = b.coeffs_ * a.coeffs_.leading();
    return r;
  }
  if (b.coeffs_.degree() == 0) {
    r.coeffs_ = a.coeffs_ * b.coeffs_.leading();
    return r;
  }
  const long M = a.field_->order();
  std::vector<mpq_class> buf(static_cast<std::size_t>(M));
  const auto& ac = a.coeffs_.coeffs();
  const auto& bc = b.coeffs_.coeffs();
  mpq_class tmp;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j].is_zero()) continue;
      mpq_mul(tmp.get_mpq_t(), ac[i].mpq().get_mpq_t(), bc[j].mpq().get_mpq_t());
      std::size_t e = i + j;
      if (e >= static_cast<std::size_t>(M)) e -= static_cast<std::size_t>(M);
      buf[e] += tmp;
    }
  }
  r.coeffs_ = a.field_->reduce(buf);
  return r;
}

CycloElem operator/(const CycloElem& a, const CycloElem& b) {
  a.require_same_field(b);
  return a * b.inverse();
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  return a.field_->order() == b.field_->order() && a.coeffs_ == b.coeffs_;
}

std::complex<double> CycloElem::to_complex() const {
  const double M = static_cast<double>(field_->order());
  std::complex<double> acc = 0;
  for (std::size_t e = 0; e < coeffs_.coeffs().size(); ++e) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / M;
    acc += coeffs_.coeffs()[e].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string CycloElem::to_string() const {
  if (auto q = as_rational()) return q->to_string();
  return coeffs_.to_string("z") + " (mod Phi_" + std::to_string(field_->order()) + "(z))";
}

CycloElem pow(const CycloElem& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  CycloElem result(base.field_ptr(), BigRational(1));
  CycloElem b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result = result * b;
    e >>= 1UL;
    if (e != 0) b = b * b;
  }
  return result;
}

CycloElem lift(const CycloElem& u, const FieldPtr& target) {
  const long M = u.conductor();
  const long N = target->order();
  if (N % M != 0) {
    throw DomainError("cannot lift from conductor " + std::to_string(M) + " to " + std::to_string(N));
  }
  const long step = N / M;
  std::vector<mpq_class> buf(static_cast<std::size_t>(N));
  const auto& c = u.coeffs().coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    buf[static_cast<std::size_t>(static_cast<long>(i) * step % N)] += c[i].mpq();
  }
  return CycloElem(target, target->reduce(buf));
}

namespace {

// sign * 2 z^offset / (w - 1) with w = z^step of exact order d > 1, using
// 1/(w - 1) = (1/d) sum_{t<d} t w^t.
CycloElem inverse_of_unit_minus_one(const FieldPtr& field, long offset, long step, long sign) {
  const long M = field->order();
  const long s = positive_mod(step, M);
  const long d = M / std::gcd(M, s);
  std::vector<mpq_class> buf(static_cast<std::size_t>(M));
  for (long t = 1; t < d; ++t) {
    const long e = positive_mod(offset + (s * t) % M, M);
    mpq_class c(2 * sign * t, d);
    c.canonicalize();
    buf[static_cast<std::size_t>(e)] += c;
  }
  return CycloElem(field, field->reduce(buf));
}

}  // namespace

CycloElem trig_value(TrigFn fn, PiRational theta, const FieldPtr& field) {
  const PiRational t = theta.normalized();
  const long M = field->order();
  if (M % 4 != 0 || M % (2 * t.b) != 0) {
    throw DomainError("conductor " + std::to_string(M) + " cannot represent trig values at " + t.to_string() +
                      " (need a multiple of " + std::to_string(required_conductor(t)) + ")");
  }
  const long e = t.a * (M / (2 * t.b));  // zeta^e = exp(i*theta)
  const long quarter = M / 4;
  const bool sin_zero = t.b == 1;
  const bool cos_zero = t.b == 2;
  auto pole = [&] {
    return PoleError(std::string(trig_name(fn)) + " has a pole at " + t.to_string());
  };
  auto sparse = [&](std::initializer_list<std::pair<long, mpq_class>> terms) {
    std::vector<mpq_class> buf(static_cast<std::size_t>(M));
    for (const auto& [ex, c] : terms) buf[static_cast<std::size_t>(positive_mod(ex, M))] += c;
    return CycloElem(field, field->reduce(buf));
  };
  const mpq_class half(1, 2);
  switch (fn) {
    case TrigFn::Sin:
      // (z^e - z^-e) / (2i), with 1/i = z^(3M/4)
      return sparse({{e + 3 * quarter, half}, {-e + 3 * quarter, -half}});
    case TrigFn::Cos:
      return sparse({{e, half}, {-e, half}});
    case TrigFn::Csc:
      if (sin_zero) throw pole();
      // 2i z^e / (z^2e - 1)
      return inverse_of_unit_minus_one(field, quarter + e, 2 * e, 1);
    case TrigFn::Sec:
      if (cos_zero) throw pole();
      // 2 z^e / (z^2e + 1) = -2 z^e / (w - 1), w = z^(2e + M/2)
      return inverse_of_unit_minus_one(field, e, 2 * e + 2 * quarter, -1);
    case TrigFn::Tan:
      if (cos_zero) throw pole();
      return trig_value(TrigFn::Sin, t, field) * trig_value(TrigFn::Sec, t, field);
    case TrigFn::Cot:
      if (sin_zero) throw pole();
      return trig_value(TrigFn::Cos, t, field) * trig_value(TrigFn::Csc, t, field);
  }
  throw DomainError("unknown trig function");
}

}  // namespace trigsum
