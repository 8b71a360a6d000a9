#include "trigsum/verify.hpp"

#include <sstream>

#include "trigsum/errors.hpp"

namespace trigsum {

std::string_view mode_name(Mode m) { return m == Mode::Exact ? "exact" : "numeric"; }

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "proved";
    case Verdict::Refuted: return "refuted";
    case Verdict::ConfirmedToPrecision: return "confirmed-to-precision";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << verdict_name(verdict) << " (" << mode_name(mode);
  if (mode == Mode::Exact) {
    os << ", conductor " << conductor << ")";
  } else {
    os << ", " << precision_bits << " bits)";
  }
  if (!witness.empty()) os << " witness " << witness;
  return os.str();
}

namespace {

void verify_exact(const Expr& diff, const ParamBinding& binding, const VerifyOptions& opt, VerifyReport& r) {
  CycloElem v = eval_exact(diff, binding, opt.conductor);
  r.conductor = v.conductor();
  if (v.is_zero()) {
    r.verdict = Verdict::Proved;
  } else {
    r.verdict = Verdict::Refuted;
    r.witness = v.to_string();
  }
  r.residual = std::move(v);
}

void verify_numeric(const Expr& diff, const ParamBinding& binding, const VerifyOptions& opt, VerifyReport& r) {
  for (long prec = opt.start_precision;; prec *= 2) {
    prec = std::min(prec, opt.max_precision);
    r.precision_bits = prec;
    std::optional<IntervalReal> box;
    try {
      box = eval_interval(diff, binding, prec);
    } catch (const PoleError&) {
      // A divisor too close to zero to separate at this precision.
      if (prec >= opt.max_precision) throw;
      continue;
    }
    r.enclosure = box->to_string();
    r.residual_bound = box->magnitude();
    if (!box->contains_zero()) {
      r.verdict = Verdict::Refuted;
      r.witness = r.enclosure;
      return;
    }
    if (box->narrower_than_pow2(opt.precision_target)) {
      r.verdict = Verdict::ConfirmedToPrecision;
      return;
    }
    if (prec >= opt.max_precision) {
      r.verdict = Verdict::Inconclusive;
      return;
    }
  }
}

}  // namespace

VerifyReport verify(const ExprPtr& lhs, const ExprPtr& rhs, const ParamBinding& binding, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  r.mode = options.mode;
  const ExprPtr diff = sub(lhs, rhs);
  if (options.mode == Mode::Exact) {
    verify_exact(*diff, binding, options, r);
  } else {
    verify_numeric(*diff, binding, options, r);
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace trigsum
