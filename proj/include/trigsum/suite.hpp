#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigsum/verify.hpp"

namespace trigsum {

/// A parameterized identity with its side conditions and default sweep.
struct SuiteCase {
  std::string id;
  std::string source;      ///< where the identity comes from
  std::string hypothesis;  ///< side conditions, human-readable
  std::string sweep;       ///< default parameter range, human-readable
  std::string note;        ///< index conventions and similar caveats
  /// The verdict a correct run produces; negative controls expect Refuted.
  Verdict expected = Verdict::Proved;
  std::function<bool(const ParamBinding&)> holds;
  /// Default bindings; `nmax` caps the case's main parameter.
  std::function<std::vector<ParamBinding>(std::optional<long> nmax)> bindings;
  std::function<VerifyReport(const ParamBinding&)> run;
};

enum class CaseStatus { Passed, Failed, Skipped };

struct CaseResult {
  CaseStatus status = CaseStatus::Skipped;
  std::optional<VerifyReport> report;
  std::string detail;  ///< failure or skip reason
};

struct SweepReport {
  std::string id;
  std::string source;
  std::string note;
  long bindings_run = 0;
  long passed = 0;
  long skipped = 0;
  long failed = 0;
  std::optional<std::string> first_failure;
  std::chrono::milliseconds elapsed{0};
};

/// All cases, ordered by id.
const std::vector<SuiteCase>& suite_catalog();
/// Throws DomainError for an unknown id.
const SuiteCase& find_case(std::string_view id);
/// Cases whose id starts with `filter` (all when empty); throws DomainError when none match.
std::vector<const SuiteCase*> select_cases(std::string_view filter);

/// "n=7, j=2, p=1"
std::string binding_string(const ParamBinding& b);

/// Skips bindings outside the hypothesis; evaluation errors count as failures.
CaseResult run_case(const SuiteCase& c, const ParamBinding& binding);
SweepReport sweep(const SuiteCase& c, std::optional<long> nmax = std::nullopt);

}  // namespace trigsum
