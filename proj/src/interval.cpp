#include "trigsum/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "trigsum/errors.hpp"

namespace trigsum {

Mpfr::Mpfr(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Mpfr::Mpfr(const Mpfr& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& o) noexcept {
  // Steal by swapping with a fresh minimal value that `o` then owns.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Mpfr& Mpfr::operator=(const Mpfr& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(v_); }

IntervalReal::IntervalReal(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

IntervalReal::IntervalReal(Mpfr lo, Mpfr hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_greater_p(lo_.get(), hi_.get())) throw DomainError("interval endpoints out of order");
}

IntervalReal IntervalReal::point(const BigRational& q, mpfr_prec_t prec) {
  IntervalReal r(prec);
  mpfr_set_q(r.lo_.get(), q.mpq().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.mpq().get_mpq_t(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::pi(mpfr_prec_t prec) {
  IntervalReal r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::from_bounds(double lo, double hi, mpfr_prec_t prec) {
  if (!(lo <= hi)) throw DomainError("interval bounds out of order");
  IntervalReal r(prec);
  mpfr_set_d(r.lo_.get(), lo, MPFR_RNDD);
  mpfr_set_d(r.hi_.get(), hi, MPFR_RNDU);
  return r;
}

bool IntervalReal::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool IntervalReal::contains(const BigRational& q) const {
  return mpfr_cmp_q(lo_.get(), q.mpq().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.mpq().get_mpq_t()) >= 0;
}

Mpfr IntervalReal::width() const {
  Mpfr w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

bool IntervalReal::narrower_than_pow2(long bits) const {
  const Mpfr w = width();
  return mpfr_cmp_ui_2exp(w.get(), 1, -bits) < 0;
}

double IntervalReal::magnitude() const {
  const double a = mpfr_get_d(lo_.get(), MPFR_RNDD);
  const double b = mpfr_get_d(hi_.get(), MPFR_RNDU);
  return std::max(-a, b) < 0 ? 0.0 : std::max(std::abs(a), std::abs(b));
}

double IntervalReal::midpoint() const {
  Mpfr m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

IntervalReal IntervalReal::operator-() const {
  IntervalReal r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

namespace {

mpfr_prec_t common_prec(const IntervalReal& a, const IntervalReal& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
  IntervalReal r(common_prec(a, b));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) {
  IntervalReal r(common_prec(a, b));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
  const mpfr_prec_t prec = common_prec(a, b);
  IntervalReal r(prec);
  Mpfr t(prec);
  bool first = true;
  for (mpfr_srcptr x : {a.lo_.get(), a.hi_.get()}) {
    for (mpfr_srcptr y : {b.lo_.get(), b.hi_.get()}) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

IntervalReal operator/(const IntervalReal& a, const IntervalReal& b) {
  if (b.contains_zero()) throw PoleError("divisor enclosure contains zero: " + b.to_string());
  const mpfr_prec_t prec = common_prec(a, b);
  IntervalReal inv(prec);
  mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
  return a * inv;
}

std::string IntervalReal::to_string() const {
  std::vector<char> buf(128);
  mpfr_snprintf(buf.data(), buf.size(), "[%.20RDg, %.20RUg]", lo_.get(), hi_.get());
  return std::string(buf.data());
}

IntervalReal pow(const IntervalReal& x, long exponent) {
  if (exponent < 0) return IntervalReal::point(BigRational(1), x.precision()) / pow(x, -exponent);
  IntervalReal result = IntervalReal::point(BigRational(1), x.precision());
  if (exponent == 0) return result;
  if (exponent % 2 == 0 && x.contains_zero()) {
    // [0, max(|lo|, |hi|)^n]
    Mpfr m(x.precision()), top(x.precision());
    mpfr_abs(m.get(), x.lo().get(), MPFR_RNDU);
    if (mpfr_cmpabs(x.hi().get(), m.get()) > 0) mpfr_abs(m.get(), x.hi().get(), MPFR_RNDU);
    mpfr_pow_ui(top.get(), m.get(), static_cast<unsigned long>(exponent), MPFR_RNDU);
    return IntervalReal(Mpfr(x.precision()), std::move(top));
  }
  // Monotone on each sign-definite piece: repeated multiplication is exact
  // enough and stays rigorous.
  IntervalReal b = x;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result = result * b;
    e >>= 1UL;
    if (e != 0) b = b * b;
  }
  return result;
}

IntervalReal sqrt(const IntervalReal& x) {
  if (mpfr_sgn(x.hi().get()) < 0) throw DomainError("square root of a negative enclosure " + x.to_string());
  Mpfr lo(x.precision()), hi(x.precision());
  // A straddling enclosure of a true nonnegative value clamps to 0.
  if (mpfr_sgn(x.lo().get()) > 0) mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
  return IntervalReal(std::move(lo), std::move(hi));
}

namespace {

enum class Wave { Sin, Cos };

// Enclosure of sin/cos at q*pi for 0 <= q < 2, via a 1-Lipschitz bound
// around the midpoint of the argument enclosure.
IntervalReal wave(Wave w, const PiRational& t, mpfr_prec_t prec) {
  if (w == Wave::Sin && t.b == 1) return IntervalReal::point(BigRational(0), prec);
  if (w == Wave::Cos && t.b == 2) return IntervalReal::point(BigRational(0), prec);
  if (w == Wave::Cos && t.b == 1) return IntervalReal::point(BigRational(t.a == 0 ? 1 : -1), prec);
  if (w == Wave::Sin && t.b == 2) return IntervalReal::point(BigRational(t.a == 1 ? 1 : -1), prec);
  const mpfr_prec_t work = prec + 16;
  const IntervalReal arg = IntervalReal::point(t.as_rational(), work) * IntervalReal::pi(work);
  Mpfr mid(work), rad(work), tmp(work), lo(work), hi(work);
  mpfr_add(mid.get(), arg.lo().get(), arg.hi().get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  mpfr_sub(rad.get(), mid.get(), arg.lo().get(), MPFR_RNDU);
  mpfr_sub(tmp.get(), arg.hi().get(), mid.get(), MPFR_RNDU);
  if (mpfr_greater_p(tmp.get(), rad.get())) mpfr_set(rad.get(), tmp.get(), MPFR_RNDU);
  auto fn = w == Wave::Sin ? mpfr_sin : mpfr_cos;
  fn(lo.get(), mid.get(), MPFR_RNDD);
  fn(hi.get(), mid.get(), MPFR_RNDU);
  Mpfr out_lo(prec), out_hi(prec);
  mpfr_sub(out_lo.get(), lo.get(), rad.get(), MPFR_RNDD);
  mpfr_add(out_hi.get(), hi.get(), rad.get(), MPFR_RNDU);
  if (mpfr_cmp_si(out_lo.get(), -1) < 0) mpfr_set_si(out_lo.get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(out_hi.get(), 1) > 0) mpfr_set_si(out_hi.get(), 1, MPFR_RNDU);
  return IntervalReal(std::move(out_lo), std::move(out_hi));
}

}  // namespace

IntervalReal trig_enclosure(TrigFn fn, PiRational theta, mpfr_prec_t prec) {
  const PiRational t = theta.normalized();
  const bool sin_zero = t.b == 1;
  const bool cos_zero = t.b == 2;
  auto pole = [&] { return PoleError(std::string(trig_name(fn)) + " has a pole at " + t.to_string()); };
  const IntervalReal one = IntervalReal::point(BigRational(1), prec);
  switch (fn) {
    case TrigFn::Sin: return wave(Wave::Sin, t, prec);
    case TrigFn::Cos: return wave(Wave::Cos, t, prec);
    case TrigFn::Tan:
      if (cos_zero) throw pole();
      return wave(Wave::Sin, t, prec) / wave(Wave::Cos, t, prec);
    case TrigFn::Cot:
      if (sin_zero) throw pole();
      return wave(Wave::Cos, t, prec) / wave(Wave::Sin, t, prec);
    case TrigFn::Sec:
      if (cos_zero) throw pole();
      return one / wave(Wave::Cos, t, prec);
    case TrigFn::Csc:
      if (sin_zero) throw pole();
      return one / wave(Wave::Sin, t, prec);
  }
  throw DomainError("unknown trig function");
}

}  // namespace trigsum
