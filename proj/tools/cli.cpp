#include "trigsum/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "trigsum/checks.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/format.hpp"
#include "trigsum/parser.hpp"
#include "trigsum/power_sums.hpp"
#include "trigsum/suite.hpp"
#include "trigsum/verify.hpp"

namespace trigsum {

namespace {

using json = nlohmann::ordered_json;

constexpr long kMaxDeriveK = 60;

// Thrown for bad flag values that CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParamBinding parse_params(const std::vector<std::string>& items) {
  ParamBinding b;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=integer, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw UsageError("--param " + name + " expects an integer, got '" + value + "'");
    b[name] = v;
  }
  return b;
}

Family require_family(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "' (expected one of Top Ton Tep Ten Uop Uon Uep Uen)");
  return *f;
}

std::vector<Family> parse_family_list(const std::string& list) {
  if (list == "all") return {kAllFamilies.begin(), kAllFamilies.end()};
  std::vector<Family> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(require_family(item));
  }
  if (out.empty()) throw UsageError("--families is empty");
  return out;
}

json formula_json(const PowerSumFormula& f) {
  json coeffs = json::array();
  for (const auto& c : f.poly.coeffs()) {
    coeffs.push_back(c.to_fraction_string());
  }
  return {{"family", std::string(family_name(f.family))}, {"k", f.k}, {"coeffs", coeffs}, {"display", factored_string(f.poly)}};
}

std::string formula_line(const PowerSumFormula& f) {
  return std::string(family_name(f.family)) + "_" + std::to_string(f.k) + "(n) = " + factored_string(f.poly);
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Proved:
    case Verdict::ConfirmedToPrecision: return exit_code::kPass;
    case Verdict::Refuted: return exit_code::kFail;
    case Verdict::Inconclusive: return exit_code::kInconclusive;
  }
  return exit_code::kInconclusive;
}

void print_report(std::ostream& out, const VerifyReport& r) {
  out << r.summary() << "\n";
  if (r.residual && r.verdict == Verdict::Refuted) out << "difference: " << r.residual->to_string() << "\n";
  if (!r.enclosure.empty()) out << "enclosure: " << r.enclosure << " (" << r.precision_bits << " bits)\n";
  if (!r.detail.empty()) out << r.detail << "\n";
}

struct VerifyArgs {
  std::string text;
  std::vector<std::string> params;
  std::string mode = "exact";
  long prec = 256;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto [lhs, rhs] = parse_identity(a.text);
  VerifyOptions opts;
  opts.mode = a.mode == "numeric" ? Mode::Numeric : Mode::Exact;
  opts.precision_target = a.prec;
  opts.start_precision = std::min<long>(opts.start_precision, a.prec);
  opts.max_precision = std::max<long>(opts.max_precision, 4 * a.prec);
  const ParamBinding binding = parse_params(a.params);
  std::set<std::string> missing = free_parameters(*lhs);
  for (const auto& name : free_parameters(*rhs)) missing.insert(name);
  for (const auto& [name, v] : binding) missing.erase(name);
  if (!missing.empty()) throw UsageError("unbound parameter '" + *missing.begin() + "' (use --param " + *missing.begin() + "=INT)");
  const VerifyReport r = verify(lhs, rhs, binding, opts);
  print_report(out, r);
  return verdict_exit(r.verdict);
}

struct DeriveArgs {
  std::string family;
  long k = 0;
  long kmax = 0;
  std::string format = "text";
};

std::vector<PowerSumFormula> derive_range(Family f, long kmax) {
  if (kmax < 1 || kmax > kMaxDeriveK) {
    throw UsageError("k must be in 1.." + std::to_string(kMaxDeriveK) + ", got " + std::to_string(kmax));
  }
  return newton_power_sums(f, kmax);
}

int cmd_derive(const DeriveArgs& a, std::ostream& out) {
  const Family f = require_family(a.family);
  if ((a.k > 0) == (a.kmax > 0)) throw UsageError("derive needs exactly one of --k or --kmax");
  std::vector<PowerSumFormula> all = derive_range(f, a.k > 0 ? a.k : a.kmax);
  if (a.k > 0) all.erase(all.begin(), all.end() - 1);
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& p : all) arr.push_back(formula_json(p));
    out << (a.k > 0 ? arr.front().dump(2) : arr.dump(2)) << "\n";
  } else {
    for (const auto& p : all) out << formula_line(p) << "\n";
  }
  return exit_code::kPass;
}

struct TableArgs {
  std::string families = "all";
  long kmax = 10;
  std::string out_path;
  std::string format = "text";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const auto families = parse_family_list(a.families);
  std::ofstream file(a.out_path);
  if (!file) throw UsageError("cannot open '" + a.out_path + "' for writing");
  json arr = json::array();
  std::size_t count = 0;
  for (Family f : families) {
    for (const auto& p : derive_range(f, a.kmax)) {
      if (a.format == "json") {
        arr.push_back(formula_json(p));
      } else {
        file << formula_line(p) << "\n";
      }
      ++count;
    }
  }
  if (a.format == "json") file << arr.dump(2) << "\n";
  if (!file.flush()) throw Error("write to '" + a.out_path + "' failed");
  out << "wrote " << count << " formulas to " << a.out_path << "\n";
  return exit_code::kPass;
}

struct SuiteArgs {
  std::string filter;
  long nmax = 0;
  std::string format = "text";
};

int cmd_suite(const SuiteArgs& a, std::ostream& out) {
  const auto cases = select_cases(a.filter);
  const std::optional<long> nmax = a.nmax > 0 ? std::optional<long>(a.nmax) : std::nullopt;
  json arr = json::array();
  long failed_cases = 0;
  long total_ms = 0;
  for (const SuiteCase* c : cases) {
    const SweepReport r = sweep(*c, nmax);
    total_ms += r.elapsed.count();
    if (r.failed > 0) ++failed_cases;
    if (a.format == "json") {
      arr.push_back({{"id", r.id},
                     {"paper_ref", r.source},
                     {"bindings_run", r.bindings_run},
                     {"passed", r.passed},
                     {"skipped", r.skipped},
                     {"failed", r.failed},
                     {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)},
                     {"note", r.note}});
      continue;
    }
    out << (r.failed == 0 ? "PASS " : "FAIL ") << std::left << std::setw(30) << r.id << " " << r.passed << "/"
        << r.bindings_run << " passed";
    if (r.skipped > 0) out << ", " << r.skipped << " skipped";
    if (r.failed > 0) out << ", " << r.failed << " failed";
    out << " (" << r.elapsed.count() << " ms)\n";
    if (!r.note.empty()) out << "     note: " << r.note << "\n";
    if (r.first_failure) out << "     first failure: " << *r.first_failure << "\n";
  }
  if (a.format == "json") {
    out << arr.dump(2) << "\n";
  } else {
    out << cases.size() - failed_cases << "/" << cases.size() << " cases passed (" << total_ms << " ms)\n";
  }
  return failed_cases == 0 ? exit_code::kPass : exit_code::kFail;
}

int cmd_catalog(const std::string& format, std::ostream& out) {
  json arr = json::array();
  for (const auto& c : suite_catalog()) {
    if (format == "json") {
      arr.push_back({{"id", c.id},
                     {"paper_ref", c.source},
                     {"hypothesis", c.hypothesis},
                     {"sweep", c.sweep},
                     {"expected", std::string(verdict_name(c.expected))},
                     {"note", c.note}});
    } else {
      out << c.id << "\n  " << c.source << "\n  hypothesis: " << c.hypothesis << "\n  sweep: " << c.sweep << "\n";
      if (c.expected != Verdict::Proved) out << "  expected: " << verdict_name(c.expected) << "\n";
    }
  }
  if (format == "json") out << arr.dump(2) << "\n";
  return exit_code::kPass;
}

int cmd_shevelev(long n, long p, long budget, std::ostream& out) {
  if (n < 3 || n % 2 == 0) throw UsageError("--n must be odd and at least 3");
  if (p < 1) throw UsageError("--p must be positive");
  const ShevelevReport r = shevelev_check(n, p, budget);
  out << "digit-sum count S_" << n << "(" << n - 1 << "^" << 2 * p << ") = " << r.digit_count.to_string() << "\n";
  out << "tangent side (2/" << n << ") sum tan^" << 2 * p << "(k pi/" << n << ") = " << r.tangent_side.to_string() << "\n";
  out << (r.equal ? "equal" : "NOT equal") << "\n";
  out << std::setprecision(6) << "lambda = " << r.lambda << ", log((n/2) S)/(2p log(n-1)) = " << r.normalized_ratio
      << ", log(S)/(2p log(n-1)) = " << r.raw_ratio << "\n";
  return r.equal ? exit_code::kPass : exit_code::kFail;
}

int cmd_franke(long N, long prec, std::ostream& out) {
  if (N < 3) throw UsageError("--N must be at least 3");
  if (prec < 32) throw UsageError("--prec must be at least 32");
  const FrankeReport r = franke_check(N, prec);
  out << "N = " << N << ", T = " << r.terms << " terms, " << prec << " bits\n";
  out << "partial sum P in " << r.partial << "\n";
  out << std::setprecision(6) << "tail bound " << r.tail_bound << "\n";
  out << "closed form in " << r.closed_form << "\n";
  out << (r.enclosed ? "enclosed" : "NOT enclosed") << " in [P, P + tail]\n";
  return r.enclosed ? exit_code::kPass : exit_code::kFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of trigonometric identities and trigonometric power sums", "trigsum"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "verify an identity 'lhs = rhs' (or 'expr', meaning expr = 0)");
  verify_cmd->add_option("identity", va.text, "identity text")->required();
  verify_cmd->add_option("--param", va.params, "parameter binding name=integer (repeatable)");
  verify_cmd->add_option("--mode", va.mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
  verify_cmd->add_option("--prec", va.prec, "numeric target precision in bits")->check(CLI::Range(16L, 1L << 20));

  DeriveArgs da;
  auto* derive_cmd = app.add_subcommand("derive", "power-sum polynomial in n for a family");
  derive_cmd->add_option("--family", da.family, "Top Ton Tep Ten Uop Uon Uep Uen")->required();
  auto* k_opt = derive_cmd->add_option("--k", da.k, "single k");
  derive_cmd->add_option("--kmax", da.kmax, "all k = 1..K")->excludes(k_opt);
  derive_cmd->add_option("--format", da.format)->check(CLI::IsMember({"text", "json"}));

  TableArgs ta;
  auto* table_cmd = app.add_subcommand("table", "write power-sum polynomials for several families to a file");
  table_cmd->add_option("--families", ta.families, "comma-separated family names or 'all'");
  table_cmd->add_option("--kmax", ta.kmax, "largest k");
  table_cmd->add_option("--out", ta.out_path, "output path")->required();
  table_cmd->add_option("--format", ta.format)->check(CLI::IsMember({"text", "json"}));

  SuiteArgs sa;
  auto* suite_cmd = app.add_subcommand("suite", "sweep the identity catalog");
  suite_cmd->add_option("--filter", sa.filter, "case id prefix");
  suite_cmd->add_option("--nmax", sa.nmax, "cap on the main sweep parameter")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--format", sa.format)->check(CLI::IsMember({"text", "json"}));

  std::string catalog_format = "text";
  auto* catalog_cmd = app.add_subcommand("catalog", "list the identity catalog");
  catalog_cmd->add_option("--format", catalog_format)->check(CLI::IsMember({"text", "json"}));

  long sn = 0, sp = 0, sbudget = 10'000'000;
  auto* shevelev_cmd = app.add_subcommand("shevelev", "digit-sum count against the tangent power sum");
  shevelev_cmd->add_option("--n", sn, "odd n >= 3")->required();
  shevelev_cmd->add_option("--p", sp, "p >= 1")->required();
  shevelev_cmd->add_option("--budget", sbudget, "largest (n-1)^(2p) to enumerate");

  long fN = 0, fprec = 128;
  auto* franke_cmd = app.add_subcommand("franke", "enclose the cot^2(m pi/N)/m^2 series");
  franke_cmd->add_option("--N", fN, "N >= 3")->required();
  franke_cmd->add_option("--prec", fprec, "precision in bits");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_code::kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return exit_code::kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(va, out);
    if (*derive_cmd) return cmd_derive(da, out);
    if (*table_cmd) return cmd_table(ta, out);
    if (*suite_cmd) return cmd_suite(sa, out);
    if (*catalog_cmd) return cmd_catalog(catalog_format, out);
    if (*shevelev_cmd) return cmd_shevelev(sn, sp, sbudget, out);
    if (*franke_cmd) return cmd_franke(fN, fprec, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::kParse;
  } catch (const DomainError& e) {
    // Unknown suite filter is a usage problem; other domain errors are runtime failures.
    if (*suite_cmd) {
      err << "usage error: " << e.what() << "\n";
      return exit_code::kUsage;
    }
    err << "error: " << e.what() << "\n";
    return exit_code::kInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInconclusive;
  }
  return exit_code::kUsage;
}

}  // namespace trigsum
