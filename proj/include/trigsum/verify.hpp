#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "trigsum/eval.hpp"
#include "trigsum/expr.hpp"

namespace trigsum {

enum class Mode { Exact, Numeric };
enum class Verdict { Proved, Refuted, ConfirmedToPrecision, Inconclusive };

std::string_view mode_name(Mode m);
/// "proved", "refuted", "confirmed-to-precision", "inconclusive".
std::string_view verdict_name(Verdict v);

struct VerifyOptions {
  Mode mode = Mode::Exact;
  /// Numeric mode: confirmation needs an enclosure of lhs - rhs narrower than 2^-precision_target.
  long precision_target = 256;
  long start_precision = 128;
  long max_precision = 4096;
  /// Exact mode: evaluate in this conductor instead of the minimal one.
  std::optional<long> conductor;
};

struct VerifyReport {
  Mode mode = Mode::Exact;
  Verdict verdict = Verdict::Inconclusive;
  long conductor = 0;                   ///< exact mode
  std::optional<CycloElem> residual;    ///< exact mode: lhs - rhs
  std::string witness;                  ///< nonzero residual (exact) or excluding enclosure (numeric)
  std::string enclosure;                ///< numeric mode: final enclosure of lhs - rhs
  long precision_bits = 0;              ///< numeric mode: working precision of the final attempt
  double residual_bound = 0;            ///< numeric mode: max |lhs - rhs| over the enclosure
  std::chrono::microseconds elapsed{0};
  std::string detail;                   ///< free-form notes from composite checks

  /// True for proved and confirmed-to-precision.
  bool passed() const noexcept { return verdict == Verdict::Proved || verdict == Verdict::ConfirmedToPrecision; }
  /// One-line summary, e.g. "proved (exact, conductor 36)".
  std::string summary() const;
};

VerifyReport verify(const ExprPtr& lhs, const ExprPtr& rhs, const ParamBinding& binding,
                    const VerifyOptions& options = {});

}  // namespace trigsum
