// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Timing budgets are part of the criteria.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "support/oracles.hpp"
#include "support/properties.hpp"
#include "trigsum/checks.hpp"
#include "trigsum/parser.hpp"
#include "trigsum/power_sums.hpp"
#include "trigsum/suite.hpp"
#include "trigsum/verify.hpp"

using namespace trigsum;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Published csc power-sum formulas Ton_1..5, Ten_1..5, Uon_1..5, Uen_1..5 (golden files).
Outcome published_table_reproduction() {
  const std::filesystem::path dir = TRIGSUM_GOLDEN_DIR;
  Outcome o;
  int matched = 0;
  for (Family f : {Family::Ton, Family::Ten, Family::Uon, Family::Uen}) {
    std::string lower(family_name(f));
    lower[0] = static_cast<char>(std::tolower(lower[0]));
    std::ifstream in(dir / ("derive_" + lower + ".txt"));
    const auto formulas = newton_power_sums(f, 5);
    long k = 0;
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) continue;
      ++k;
      const std::string text = line.substr(line.find('=') + 2);
      if (k > 5 || oracle::parse_display_polynomial(text) != formulas[k - 1].poly) {
        o.ok = false;
        o.detail = "mismatch at " + line;
        return o;
      }
      ++matched;
    }
  }
  o.ok = matched == 20;
  o.detail = std::to_string(matched) + "/20 propositions equal";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  long checks = 0;
  for (Family f : kAllFamilies) {
    const auto formulas = newton_power_sums(f, 8);
    for (long n = 1; n <= 12; ++n) {
      const auto sums = family_sums_exact(f, 8, n);
      const long kmax = std::min(8L, max_valid_k(f, n).value_or(8));
      for (long k = 1; k <= kmax; ++k) {
        ++checks;
        if (formulas[k - 1].poly.eval(BigRational(n)) != sums[k - 1]) {
          o.ok = false;
          o.detail = std::string(family_name(f)) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
          return o;
        }
      }
    }
  }
  o.detail = std::to_string(checks) + " exact checks";
  return o;
}

Outcome closed_form_theorems() {
  Outcome o;
  for (Family f : {Family::Top, Family::Tep, Family::Uop, Family::Uep}) {
    const auto newton = newton_power_sums(f, 20);
    for (long k = 1; k <= 20; ++k) {
      const UniPoly closed = closed_form_sin(f, k).poly;
      if (closed != newton[k - 1].poly || closed != oracle::theorem_polynomial(f, k)) {
        o.ok = false;
        o.detail = std::string(family_name(f)) + " k=" + std::to_string(k);
        return o;
      }
    }
  }
  o.detail = "4 families, k <= 20";
  return o;
}

Outcome corpus_sweep() {
  Outcome o;
  long cases = 0, bindings = 0;
  for (const auto& c : suite_catalog()) {
    const SweepReport r = sweep(c);
    ++cases;
    bindings += r.bindings_run;
    if (r.failed > 0 || r.skipped > 0) {
      o.ok = false;
      o.detail = r.id + ": " + std::to_string(r.failed) + " failed, " + std::to_string(r.skipped) + " skipped" +
                 (r.first_failure ? " (" + *r.first_failure + ")" : "");
      return o;
    }
  }
  o.detail = std::to_string(cases) + " cases, " + std::to_string(bindings) + " bindings, 0 failures";
  return o;
}

Outcome landmarks() {
  Outcome o;
  auto run = [](std::string_view text, VerifyOptions opt = {}) {
    const auto [l, r] = parse_identity(text);
    return verify(l, r, {}, opt);
  };
  const VerifyReport morrie = run("cos(pi/9)*cos(2*pi/9)*cos(4*pi/9) = 1/8");
  const VerifyReport heptagon = run("sin(3*pi/7)^2/sin(2*pi/7) - sin(2*pi/7)^2/sin(pi/7) + sin(pi/7)^2/sin(3*pi/7) = 0");
  VerifyOptions g;
  g.mode = Mode::Numeric;
  g.start_precision = 256;
  g.max_precision = 256;
  g.precision_target = 200;
  const VerifyReport gauss = run(
      "cos(pi/17) = (1 - sqrt(17) + sqrt(34-2*sqrt(17)) + 2*sqrt(17+3*sqrt(17)+sqrt(34-2*sqrt(17))+2*sqrt(34+2*sqrt(17))))/16",
      g);
  o.ok = morrie.verdict == Verdict::Proved && heptagon.verdict == Verdict::Proved &&
         gauss.verdict == Verdict::ConfirmedToPrecision && gauss.precision_bits == 256;
  o.detail = "Morrie " + morrie.summary() + "; heptagon " + heptagon.summary() + "; Gauss " + gauss.summary();
  return o;
}

Outcome conjectures() {
  Outcome o;
  for (long k = 1; k <= 30; ++k) {
    const auto [a, b] = conjecture_closed_forms(k);
    if (a.verdict != Verdict::Proved || b.verdict != Verdict::Proved) {
      o.ok = false;
      o.detail = "k = " + std::to_string(k) + ": " + a.summary() + " / " + b.summary();
      return o;
    }
  }
  const IntervalReal s1 = conjecture_sum_enclosure(1, 500), s2 = conjecture_sum_enclosure(2, 500);
  const double d1 = std::max(std::abs(s1.lo().to_double() + 0.5), std::abs(s1.hi().to_double() + 0.5));
  const double d2 = std::max(std::abs(s2.lo().to_double() - 0.5), std::abs(s2.hi().to_double() - 0.5));
  o.ok = d1 < 0.01 && d2 < 0.01;
  std::ostringstream os;
  os << "k <= 30 proved; k = 500 sums " << s1.midpoint() << ", " << s2.midpoint();
  o.detail = os.str();
  return o;
}

Outcome shevelev() {
  Outcome o;
  int pairs = 0;
  for (auto [n, pmax] : std::vector<std::pair<long, long>>{{3, 5}, {5, 3}, {7, 2}, {9, 2}}) {
    for (long p = 1; p <= pmax; ++p) {
      const ShevelevReport r = shevelev_check(n, p);
      ++pairs;
      if (!r.equal) {
        o.ok = false;
        o.detail = "(" + std::to_string(n) + "," + std::to_string(p) + "): " + r.digit_count.to_string() + " vs " +
                   r.tangent_side.to_string();
        return o;
      }
    }
  }
  o.detail = std::to_string(pairs) + " (n,p) pairs equal";
  return o;
}

Outcome franke() {
  Outcome o;
  for (long N : {3L, 4L, 5L, 6L, 10L}) {
    const FrankeReport r = franke_check(N, 128);
    if (!r.enclosed) {
      o.ok = false;
      o.detail = "N = " + std::to_string(N) + ": closed form " + r.closed_form + " outside " + r.partial;
      return o;
    }
  }
  o.detail = "N in {3, 4, 5, 6, 10} enclosed at 128 bits";
  return o;
}

Outcome properties() {
  const std::vector<std::pair<std::string, std::function<oracle::PropertyResult()>>> props = {
      {"field axioms", [] { return oracle::field_axioms(); }},
      {"Pythagorean", [] { return oracle::pythagorean(); }},
      {"parse round-trip", [] { return oracle::parse_round_trip(); }},
      {"Bezout", [] { return oracle::poly_bezout(); }},
      {"reciprocal involution", [] { return oracle::poly_reciprocal_involution(); }},
      {"binomial identity k <= 200", [] { return oracle::binomial_alternating_identity(200); }},
      {"product formula", [] { return oracle::product_formula_instances(); }},
  };
  Outcome o;
  long checked = 0;
  for (const auto& [name, run] : props) {
    const auto r = run();
    checked += r.checked;
    if (!r.ok()) {
      o.ok = false;
      o.detail = name + ": " + r.summary();
      return o;
    }
  }
  o.detail = std::to_string(props.size()) + " suites, " + std::to_string(checked) + " instances";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::chrono::milliseconds budget;
    Outcome (*run)();
  };
  using std::chrono::milliseconds;
  const std::vector<Criterion> criteria = {
      {1, "Published table reproduction", milliseconds(1000), published_table_reproduction},
      {2, "Oracle equivalence", milliseconds(30000), oracle_equivalence},
      {3, "Closed-form theorems", milliseconds(0), closed_form_theorems},
      {4, "Identity corpus sweep", milliseconds(60000), corpus_sweep},
      {5, "Landmark identities", milliseconds(0), landmarks},
      {6, "Conjectures", milliseconds(0), conjectures},
      {7, "Shevelev theorem", milliseconds(30000), shevelev},
      {8, "Franke particular case", milliseconds(0), franke},
      {9, "Property suites", milliseconds(0), properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<milliseconds>(Clock::now() - start);
    if (c.budget.count() > 0 && ms > c.budget) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(c.budget.count()) + " ms budget";
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << " - " << o.detail << " ("
              << ms.count() << " ms)" << std::endl;
  }
  std::cout << (failures == 0 ? "all 9 criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
