#include "trigsum/suite.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "trigsum/checks.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/parser.hpp"

namespace trigsum {

namespace {

using Pred = std::function<bool(const ParamBinding&)>;
using Gen = std::function<std::vector<ParamBinding>(std::optional<long>)>;

long at(const ParamBinding& b, const char* name) {
  auto it = b.find(name);
  if (it == b.end()) throw UnboundParameter(std::string("binding lacks '") + name + "'");
  return it->second;
}

bool has(const ParamBinding& b, std::initializer_list<const char*> names) {
  return std::all_of(names.begin(), names.end(), [&](const char* n) { return b.find(n) != b.end(); });
}

bool is_odd(long v) { return v % 2 != 0; }

// ---- generators -----------------------------------------------------------

// name = lo..hi (capped by nmax), keeping values accepted by `keep`.
Gen one_param(std::string name, long lo, long hi, std::function<bool(long)> keep) {
  return [=](std::optional<long> nmax) {
    std::vector<ParamBinding> out;
    const long top = nmax ? std::min(hi, *nmax) : hi;
    for (long v = lo; v <= top; ++v) {
      if (keep(v)) out.push_back({{name, v}});
    }
    return out;
  };
}

// (n, j, p = j/2 when j is even) over n = lo..hi and 1 <= j <= 2n.
Gen n_and_j(long lo, long hi, std::function<bool(long n, long j)> keep) {
  return [=](std::optional<long> nmax) {
    std::vector<ParamBinding> out;
    const long top = nmax ? std::min(hi, *nmax) : hi;
    for (long n = lo; n <= top; ++n) {
      for (long j = 1; j <= 2 * n; ++j) {
        if (!keep(n, j)) continue;
        ParamBinding b{{"n", n}, {"j", j}};
        if (j % 2 == 0) b["p"] = j / 2;
        out.push_back(std::move(b));
      }
    }
    return out;
  };
}

// (n, p) over n = lo..hi and 1 <= p <= 2n.
Gen n_and_p(long lo, long hi, std::function<bool(long n, long p)> keep) {
  return [=](std::optional<long> nmax) {
    std::vector<ParamBinding> out;
    const long top = nmax ? std::min(hi, *nmax) : hi;
    for (long n = lo; n <= top; ++n) {
      for (long p = 1; p <= 2 * n; ++p) {
        if (keep(n, p)) out.push_back({{"n", n}, {"p", p}});
      }
    }
    return out;
  };
}

Gen fixed(std::vector<ParamBinding> list) {
  return [list = std::move(list)](std::optional<long>) { return list; };
}

// ---- hypotheses -----------------------------------------------------------

bool odd_n_even_j_coprime(const ParamBinding& b) {
  if (!has(b, {"n", "j", "p"})) return false;
  const long n = at(b, "n"), j = at(b, "j"), p = at(b, "p");
  return n >= 3 && is_odd(n) && j >= 2 && j == 2 * p && std::gcd(j, n) == 1;
}

bool even_n_j_2mod4(const ParamBinding& b) {
  if (!has(b, {"n", "j", "p"})) return false;
  const long n = at(b, "n"), j = at(b, "j"), p = at(b, "p");
  return n >= 2 && n % 2 == 0 && j > 0 && j % 4 == 2 && j == 2 * p && std::gcd(p, n / 2) == 1;
}

bool odd_n_coprime_j(const ParamBinding& b) {
  if (!has(b, {"n", "j"})) return false;
  const long n = at(b, "n"), j = at(b, "j");
  return n >= 3 && is_odd(n) && j >= 1 && std::gcd(j, n) == 1;
}

bool odd_n_coprime_p(const ParamBinding& b) {
  if (!has(b, {"n", "p"})) return false;
  const long n = at(b, "n"), p = at(b, "p");
  return n >= 3 && is_odd(n) && p >= 1 && std::gcd(p, n) == 1;
}

bool even_n_odd_p(const ParamBinding& b) {
  if (!has(b, {"n", "p"})) return false;
  const long n = at(b, "n"), p = at(b, "p");
  return n >= 2 && n % 2 == 0 && p >= 1 && is_odd(p) && std::gcd(p, n / 2) == 1;
}

bool coprime_p(const ParamBinding& b) {
  if (!has(b, {"n", "p"})) return false;
  const long n = at(b, "n"), p = at(b, "p");
  return n >= 2 && p >= 1 && std::gcd(p, n) == 1;
}

Pred param_is(const char* name, std::function<bool(long)> ok) {
  return [=](const ParamBinding& b) { return b.find(name) != b.end() && ok(at(b, name)); };
}

bool no_params(const ParamBinding& b) { return b.empty(); }

// True when q*pi is not a multiple of pi, i.e. sin(q*pi) != 0; q = num/den.
bool sin_nonzero(long num, long den) { return num % den != 0; }

// ---- cases ----------------------------------------------------------------

struct Meta {
  std::string id;
  std::string source;
  std::string hypothesis;
  std::string sweep;
  std::string note = {};
};

SuiteCase identity_case(Meta m, const std::string& identity, Pred holds, Gen gen,
                        Verdict expected = Verdict::Proved, VerifyOptions options = {}) {
  const auto sides = parse_identity(identity);
  SuiteCase c{std::move(m.id), std::move(m.source), std::move(m.hypothesis), std::move(m.sweep),
              std::move(m.note), expected, std::move(holds), std::move(gen), {}};
  c.run = [sides, options](const ParamBinding& b) { return verify(sides.first, sides.second, b, options); };
  return c;
}

// Several identities that must all hold; the first failing step is the witness.
SuiteCase chain_case(Meta m, std::vector<std::pair<std::string, std::string>> steps, Pred holds, Gen gen) {
  std::vector<std::pair<std::string, std::pair<ExprPtr, ExprPtr>>> parsed;
  for (auto& [label, text] : steps) parsed.emplace_back(label, parse_identity(text));
  SuiteCase c{std::move(m.id), std::move(m.source), std::move(m.hypothesis), std::move(m.sweep),
              std::move(m.note), Verdict::Proved, std::move(holds), std::move(gen), {}};
  c.run = [parsed](const ParamBinding& b) {
    VerifyReport total;
    total.verdict = Verdict::Proved;
    std::ostringstream detail;
    for (const auto& [label, sides] : parsed) {
      VerifyReport r = verify(sides.first, sides.second, b);
      total.conductor = std::max(total.conductor, r.conductor);
      total.elapsed += r.elapsed;
      detail << (detail.tellp() > 0 ? "; " : "") << label << ": " << verdict_name(r.verdict);
      if (r.verdict != Verdict::Proved && total.verdict == Verdict::Proved) {
        total.verdict = r.verdict;
        total.witness = label + ": " + r.witness;
        total.residual = r.residual;
      }
    }
    total.detail = detail.str();
    return total;
  };
  return c;
}

SuiteCase custom_case(Meta m, Verdict expected, Pred holds, Gen gen, std::function<VerifyReport(const ParamBinding&)> run) {
  return SuiteCase{std::move(m.id), std::move(m.source), std::move(m.hypothesis), std::move(m.sweep),
                   std::move(m.note), expected, std::move(holds), std::move(gen), std::move(run)};
}

// Seeded so that sweeps are reproducible.
constexpr unsigned kSeed = 20240611;

std::vector<ParamBinding> random_progressions(std::size_t count) {
  std::mt19937 rng(kSeed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::vector<ParamBinding> out;
  while (out.size() < count) {
    const long b = uniform(1, 9), d = uniform(1, 9);
    const long a = uniform(-2 * b, 2 * b), c = uniform(1, 4 * d - 1);
    if (!sin_nonzero(c, 2 * d)) continue;
    out.push_back({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"K", uniform(1, 12)}});
  }
  return out;
}

std::vector<ParamBinding> random_angle_pairs(std::size_t count) {
  std::mt19937 rng(kSeed + 1);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::vector<ParamBinding> out;
  while (out.size() < count) {
    const long b = uniform(1, 10), d = uniform(1, 10);
    const long a = uniform(-2 * b, 2 * b), c = uniform(-2 * d, 2 * d);
    // (x +- y)/2 = (a d +- c b) pi / (2 b d)
    if (!sin_nonzero(a * d + c * b, 2 * b * d) || !sin_nonzero(a * d - c * b, 2 * b * d)) continue;
    out.push_back({{"a", a}, {"b", b}, {"c", c}, {"d", d}});
  }
  return out;
}

bool progression_ok(const ParamBinding& b) {
  return has(b, {"a", "b", "c", "d", "K"}) && at(b, "b") > 0 && at(b, "d") > 0 && at(b, "K") >= 1 &&
         sin_nonzero(at(b, "c"), 2 * at(b, "d"));
}

bool angle_pair_ok(const ParamBinding& b) {
  if (!has(b, {"a", "b", "c", "d"}) || at(b, "b") <= 0 || at(b, "d") <= 0) return false;
  const long a = at(b, "a"), bb = at(b, "b"), c = at(b, "c"), d = at(b, "d");
  return sin_nonzero(a * d + c * bb, 2 * bb * d) && sin_nonzero(a * d - c * bb, 2 * bb * d);
}

// n = 1..8 times 20 angles a*pi/b with sin(n*a*pi/b) != 0.
Gen product_formula_bindings() {
  return [](std::optional<long> nmax) {
    std::mt19937 rng(kSeed + 2);
    auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    std::vector<ParamBinding> out;
    const long top = nmax ? std::min(8L, *nmax) : 8L;
    for (long n = 1; n <= top; ++n) {
      int made = 0;
      while (made < 20) {
        const long b = uniform(2, 12), a = uniform(1, 2 * b - 1);
        if (!sin_nonzero(n * a, b)) continue;
        out.push_back({{"n", n}, {"a", a}, {"b", b}});
        ++made;
      }
    }
    return out;
  };
}

bool product_formula_ok(const ParamBinding& b) {
  return has(b, {"n", "a", "b"}) && at(b, "n") >= 1 && at(b, "b") > 0 && sin_nonzero(at(b, "n") * at(b, "a"), at(b, "b"));
}

// Summands shared by several cases.
const std::string kEq07Term =
    "sin((j+1)*(2*k+1)*pi/(2*n))*sin((j-1)*(2*k+1)*pi/(2*n))/(sin((2*k+1)*pi/(2*n))^2*sin(p*(2*k+1)*pi/n)^2)";
const std::string kEq09Term = "sin((j+1)*k*pi/n)*sin((j-1)*k*pi/n)/(sin(k*pi/n)^2*sin(j*k*pi/n)^2)";
const std::string kEq10Term =
    "sin((j+1)*(2*k+1)*pi/n)*sin((j-1)*(2*k+1)*pi/n)/(sin((2*k+1)*pi/n)^2*sin(j*(2*k+1)*pi/n)^2)";

std::string sum_text(const std::string& range, const std::string& body) { return "sum(k=" + range + ", " + body + ")"; }

VerifyReport numeric_report(bool ok, long prec, std::string enclosure, std::string detail) {
  VerifyReport r;
  r.mode = Mode::Numeric;
  r.verdict = ok ? Verdict::ConfirmedToPrecision : Verdict::Refuted;
  r.precision_bits = prec;
  r.enclosure = enclosure;
  if (!ok) r.witness = std::move(enclosure);
  r.detail = std::move(detail);
  return r;
}

std::vector<SuiteCase> build_catalog() {
  std::vector<SuiteCase> cs;
  auto odd = [](long v) { return is_odd(v); };
  auto even = [](long v) { return v % 2 == 0; };
  auto any = [](long) { return true; };

  // -- six identities and their revisits ----------------------------------
  cs.push_back(identity_case(
      {"eq05", "alternating sin sum at odd multiples of pi/(2k)", "k odd, k >= 3", "odd k = 3..25",
       "k = 1 gives an empty sum against 1/2*(-1)^(-1); treated as outside the hypothesis"},
      "sum(j=1..(k-1)/2, (-1)^(j-1)*sin((2*j-1)*pi/(2*k))) = (-1)^((k-3)/2)/2",
      param_is("k", [](long k) { return k >= 3 && is_odd(k); }), one_param("k", 3, 25, odd)));
  cs.push_back(identity_case(
      {"eq06", "alternating csc sum at odd multiples of pi/(2k)", "k odd, k >= 1", "odd k = 1..25"},
      "sum(j=1..(k-1)/2, (-1)^(j-1)*csc((2*j-1)*pi/(2*k))) = (k+(-1)^((k+1)/2))/2",
      param_is("k", [](long k) { return k >= 1 && is_odd(k); }), one_param("k", 1, 25, odd)));
  cs.push_back(identity_case(
      {"eq07", "quotient of sin products over odd multiples of pi/(2n)", "n odd >= 3, j = 2p, gcd(j, n) = 1",
       "odd n = 3..21, even j <= 2n"},
      sum_text("0..(n-3)/2", kEq07Term) + " = (n^2-1)/3", odd_n_even_j_coprime,
      n_and_j(3, 21, [](long n, long j) { return is_odd(n) && j % 2 == 0 && std::gcd(j, n) == 1; })));
  const auto eq08_gen = n_and_j(2, 24, [](long n, long j) { return n % 2 == 0 && j % 4 == 2 && std::gcd(j / 2, n / 2) == 1; });
  cs.push_back(identity_case(
      {"eq08", "quotient of sin products, even n", "n even, j = 2p, j = 2 mod 4, gcd(p, n/2) = 1",
       "even n = 2..24, j = 2 mod 4, j <= 2n",
       "summed from k = 0; the k = 1 start used in the revisit differs by the k = 0 term "
       "1/sin^2(pi/(2n)) - 1/sin^2(p*pi/n), which never vanishes (see eq08-k1-*)"},
      sum_text("0..n/2-1", kEq07Term) + " = n^2/4", even_n_j_2mod4, eq08_gen));
  cs.push_back(identity_case(
      {"eq08-k1-offset", "quotient of sin products, even n, summed from k = 1",
       "n even, j = 2p, j = 2 mod 4, gcd(p, n/2) = 1", "even n = 2..24, j = 2 mod 4, j <= 2n",
       "the k = 1 start equals n^2/4 minus the k = 0 term"},
      sum_text("1..n/2-1", kEq07Term) + " = n^2/4 - (1/sin(pi/(2*n))^2 - 1/sin(p*pi/n)^2)", even_n_j_2mod4, eq08_gen));
  cs.push_back(identity_case(
      {"eq08-k1-refuted", "quotient of sin products, even n, summed from k = 1 (negative control)",
       "n even, j = 2p, j = 2 mod 4, gcd(p, n/2) = 1", "even n = 2..24, j = 2 mod 4, j <= 2n",
       "expected refuted at every binding: the k = 1 start does not sum to n^2/4"},
      sum_text("1..n/2-1", kEq07Term) + " = n^2/4", even_n_j_2mod4, eq08_gen, Verdict::Refuted));
  cs.push_back(identity_case(
      {"eq09", "quotient of sin products at multiples of pi/n, even n", "n even, j = 2p, j = 2 mod 4, gcd(p, n/2) = 1",
       "even n = 2..24, j = 2 mod 4, j <= 2n", "summed from k = 1: the k = 0 term is 0/0"},
      sum_text("1..n/2-1", kEq09Term) + " = (n^2-4)/12", even_n_j_2mod4, eq08_gen));
  cs.push_back(identity_case(
      {"eq10", "quotient of sin products over odd multiples of pi/n", "n odd >= 3, gcd(j, n) = 1",
       "odd n = 3..21, 1 <= j <= 2n"},
      sum_text("0..(n-3)/2", kEq10Term) + " = 0", odd_n_coprime_j,
      n_and_j(3, 21, [](long n, long j) { return is_odd(n) && std::gcd(j, n) == 1; })));

  cs.push_back(chain_case(
      {"eq05-revisit", "eq05 at k = 2n+1 is the alternating sin sum at odd multiples of pi/(4n+2)", "n >= 1", "n = 1..12"},
      {{"substitute k = 2n+1", "sum(j=1..n, (-1)^(j-1)*sin((2*j-1)*pi/(2*(2*n+1)))) = "
                               "sum(j=1..n, (-1)^(j+1)*sin((2*j-1)*pi/(4*n+2)))"},
       {"literature sum", "sum(j=1..n, (-1)^(j+1)*sin((2*j-1)*pi/(4*n+2))) = (-1)^(n+1)/2"},
       {"right sides agree", "(-1)^((2*n+1-3)/2)/2 = (-1)^(n+1)/2"}},
      param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 12, any)));
  cs.push_back(chain_case(
      {"eq06-revisit", "eq06 at k = 2n+1 is Hassan's alternating csc sum after j -> j+1", "n >= 1", "n = 1..12"},
      {{"shift index", "sum(j=1..n, (-1)^(j-1)*csc((2*j-1)*pi/(2*(2*n+1)))) = "
                       "sum(j=0..n-1, (-1)^j*csc((2*j+1)*pi/(4*n+2)))"},
       {"literature sum", "sum(j=0..n-1, (-1)^j*csc((2*j+1)*pi/(4*n+2))) = n + (1-(-1)^n)/2"},
       {"right sides agree", "(2*n+1+(-1)^((2*n+2)/2))/2 = n + (1-(-1)^n)/2"}},
      param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 12, any)));
  cs.push_back(chain_case(
      {"eq07-revisit", "eq07 split by the product-to-difference formula, then two csc^2 sums",
       "n odd >= 3, j = 2p, gcd(j, n) = 1", "odd n = 3..21, even j <= 2n"},
      {{"split", sum_text("0..(n-3)/2", kEq07Term) + " = " + sum_text("0..(n-3)/2", "1/sin((2*k+1)*pi/(2*n))^2") +
                     " - " + sum_text("0..(n-3)/2", "1/sin(p*(2*k+1)*pi/n)^2")},
       {"odd multiples of pi/(2n)", sum_text("0..(n-3)/2", "1/sin((2*k+1)*pi/(2*n))^2") + " = (n^2-1)/2"},
       {"p-scaled odd multiples", sum_text("0..(n-3)/2", "1/sin(p*(2*k+1)*pi/n)^2") + " = (n^2-1)/6"},
       {"combine", "(n^2-1)/2 - (n^2-1)/6 = (n^2-1)/3"}},
      odd_n_even_j_coprime,
      n_and_j(3, 21, [](long n, long j) { return is_odd(n) && j % 2 == 0 && std::gcd(j, n) == 1; })));
  cs.push_back(chain_case(
      {"eq08-revisit", "eq08 split by the product-to-difference formula, then two csc^2 sums",
       "n even, j = 2p, j = 2 mod 4, gcd(p, n/2) = 1", "even n = 2..24, j = 2 mod 4, j <= 2n", "k = 0 start"},
      {{"split", sum_text("0..n/2-1", kEq07Term) + " = " + sum_text("0..n/2-1", "1/sin((2*k+1)*pi/(2*n))^2") + " - " +
                     sum_text("0..n/2-1", "1/sin(p*(2*k+1)*pi/n)^2")},
       {"odd multiples of pi/(2n)", sum_text("0..n/2-1", "1/sin((2*k+1)*pi/(2*n))^2") + " = n^2/2"},
       {"p-scaled odd multiples", sum_text("0..n/2-1", "1/sin(p*(2*k+1)*pi/n)^2") + " = n^2/4"},
       {"combine", "n^2/2 - n^2/4 = n^2/4"}},
      even_n_j_2mod4, eq08_gen));
  cs.push_back(chain_case(
      {"eq09-revisit", "eq09 split by the product-to-difference formula, then two csc^2 sums",
       "n even, j = 2p, j = 2 mod 4, gcd(p, n/2) = 1", "even n = 2..24, j = 2 mod 4, j <= 2n"},
      {{"split", sum_text("1..n/2-1", kEq09Term) + " = " + sum_text("1..n/2-1", "1/sin(k*pi/n)^2") + " - " +
                     sum_text("1..n/2-1", "1/sin(j*k*pi/n)^2")},
       {"multiples of pi/n", sum_text("1..n/2-1", "1/sin(k*pi/n)^2") + " = (n^2-4)/6"},
       {"rescale", sum_text("1..n/2-1", "1/sin(j*k*pi/n)^2") + " = " + sum_text("1..n/2-1", "1/sin(p*k*pi/(n/2))^2")},
       {"multiples of p*pi/(n/2)", sum_text("1..n/2-1", "1/sin(p*k*pi/(n/2))^2") + " = ((n/2)^2-1)/3"},
       {"combine", "(n^2-4)/6 - ((n/2)^2-1)/3 = (n^2-4)/12"}},
      even_n_j_2mod4, eq08_gen));
  cs.push_back(chain_case(
      {"eq10-revisit", "eq10 split by the product-to-difference formula into two equal csc^2 sums",
       "n odd >= 3, gcd(j, n) = 1", "odd n = 3..21, 1 <= j <= 2n"},
      {{"split", sum_text("0..(n-3)/2", kEq10Term) + " = " + sum_text("0..(n-3)/2", "1/sin((2*k+1)*pi/n)^2") + " - " +
                     sum_text("0..(n-3)/2", "1/sin(j*(2*k+1)*pi/n)^2")},
       {"odd multiples of pi/n", sum_text("0..(n-3)/2", "1/sin((2*k+1)*pi/n)^2") + " = (n^2-1)/6"},
       {"j-scaled odd multiples", sum_text("0..(n-3)/2", "1/sin(j*(2*k+1)*pi/n)^2") + " = (n^2-1)/6"}},
      odd_n_coprime_j, n_and_j(3, 21, [](long n, long j) { return is_odd(n) && std::gcd(j, n) == 1; })));
  cs.push_back(custom_case(
      {"sharp-product", "sin x sin y / (sin^2((x+y)/2) sin^2((x-y)/2)) as a difference of csc^2",
       "x = a*pi/b, y = c*pi/d with sin((x+y)/2) and sin((x-y)/2) nonzero", "30 seeded random angle pairs, b, d <= 10"},
      Verdict::Proved, angle_pair_ok, fixed(random_angle_pairs(30)),
      [sides = parse_identity("sin(a*pi/b)*sin(c*pi/d)/(sin((a*pi/b+c*pi/d)/2)^2*sin((a*pi/b-c*pi/d)/2)^2) = "
                              "1/sin((a*pi/b-c*pi/d)/2)^2 - 1/sin((a*pi/b+c*pi/d)/2)^2")](const ParamBinding& b) {
        return verify(sides.first, sides.second, b);
      }));

  // -- literature identities ----------------------------------------------
  cs.push_back(identity_case({"pare-sin", "alternating sin sum at odd multiples of pi/(4n+2)", "n >= 1", "n = 1..30"},
                             "sum(j=1..n, (-1)^(j+1)*sin((2*j-1)*pi/(4*n+2))) = (-1)^(n+1)/2",
                             param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 30, any)));
  cs.push_back(identity_case({"pare-cos", "alternating cos sum at multiples of pi/(2n+1)", "n >= 1", "n = 1..30"},
                             "sum(j=1..n, (-1)^(j+1)*cos(j*pi/(2*n+1))) = 1/2",
                             param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 30, any)));
  cs.push_back(identity_case({"weller-cos2", "alternating cos^2 sum at multiples of pi/(2n+2)", "n >= 1", "n = 1..30"},
                             "sum(k=1..n, (-1)^(k+1)*cos(k*pi/(2*n+2))^2) = 1/2",
                             param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 30, any)));
  cs.push_back(identity_case({"weller-sin2", "alternating sin^2 sum at multiples of pi/(2n+2)", "n >= 1", "n = 1..30"},
                             "sum(k=1..n, (-1)^(k+1)*sin(k*pi/(2*n+2))^2) = (-1)^(n+1)/2",
                             param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 30, any)));
  cs.push_back(identity_case(
      {"cos-progression", "sum of cosines in arithmetic progression (complex exponential form)",
       "alpha = a*pi/b, beta = c*pi/d with sin(beta/2) != 0, K >= 1", "50 seeded random (alpha, beta, K), b, d <= 9, K <= 12"},
      "sum(m=0..K-1, cos(a*pi/b + m*c*pi/d)) = sin(c*K*pi/(2*d))/sin(c*pi/(2*d))*cos(a*pi/b + c*(K-1)*pi/(2*d))",
      progression_ok, fixed(random_progressions(50))));
  cs.push_back(identity_case({"hassan-csc", "alternating csc sum at odd multiples of pi/(4n+2)", "n >= 1", "n = 1..30"},
                             "sum(j=0..n-1, (-1)^j*csc((2*j+1)*pi/(4*n+2))) = n + (1-(-1)^n)/2",
                             param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 30, any)));
  cs.push_back(identity_case(
      {"hassan-sec", "alternating sec sum at multiples of pi/n", "n odd >= 3", "odd n = 3..29"},
      "sum(k=1..(n-1)/2, (-1)^(k+1)/cos(k*pi/n)) = (-1)^((n+1)/2)*(n-1)/2 + (1-(-1)^((n-1)/2))/2",
      param_is("n", [](long n) { return n >= 3 && is_odd(n); }), one_param("n", 3, 29, odd)));
  cs.push_back(identity_case({"bromwich-I", "Bromwich: csc^2 over k < n/2, odd n", "n odd", "odd n = 1..29"},
                             "sum(k=1..(n-1)/2, 1/sin(k*pi/n)^2) = (n^2-1)/6",
                             param_is("n", [](long n) { return n >= 1 && is_odd(n); }), one_param("n", 1, 30, odd)));
  cs.push_back(identity_case({"bromwich-II", "Bromwich: csc^2 over k < n/2, even n", "n even", "even n = 2..30"},
                             "sum(k=1..n/2-1, 1/sin(k*pi/n)^2) = (n^2-4)/6",
                             param_is("n", [](long n) { return n >= 2 && n % 2 == 0; }), one_param("n", 2, 30, even)));
  cs.push_back(identity_case({"bromwich-III", "Bromwich: csc^2 over odd multiples of pi/(2n), odd n", "n odd",
                              "odd n = 1..29"},
                             "sum(k=0..(n-3)/2, 1/sin((2*k+1)*pi/(2*n))^2) = (n^2-1)/2",
                             param_is("n", [](long n) { return n >= 1 && is_odd(n); }), one_param("n", 1, 30, odd)));
  cs.push_back(identity_case({"bromwich-IV", "Bromwich: csc^2 over odd multiples of pi/(2n), even n", "n even",
                              "even n = 2..30"},
                             "sum(k=0..n/2-1, 1/sin((2*k+1)*pi/(2*n))^2) = n^2/2",
                             param_is("n", [](long n) { return n >= 2 && n % 2 == 0; }), one_param("n", 2, 30, even)));
  cs.push_back(identity_case({"fisher", "Fisher: csc^2 over all multiples of pi/n", "n >= 1", "n = 1..30"},
                             "sum(k=1..n-1, 1/sin(k*pi/n)^2) = (n^2-1)/3",
                             param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 30, any)));
  cs.push_back(identity_case({"remark-bru", "csc^2 over all odd multiples of pi/(2n)", "n >= 1", "n = 1..30"},
                             "sum(k=0..n-1, 1/sin((2*k+1)*pi/(2*n))^2) = n^2",
                             param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 30, any)));
  cs.push_back(identity_case({"remark-bru-disguised", "csc^2 over odd multiples of pi/(2n), shifted index", "n >= 1",
                              "n = 1..30"},
                             "sum(k=1..n, 1/sin((2*k+1)*pi/(2*n))^2) = n^2",
                             param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 30, any)));
  cs.push_back(identity_case({"cot2-sum", "cot^2 over all multiples of pi/n", "n >= 1", "n = 1..30"},
                             "sum(k=1..n-1, cot(k*pi/n)^2) = (n-1)*(n-2)/3",
                             param_is("n", [](long n) { return n >= 1; }), one_param("n", 1, 30, any)));

  // -- csc^2 lemma and the identity proved along the way --------------------
  const auto lemma_i_gen = n_and_p(3, 21, [](long n, long p) { return is_odd(n) && std::gcd(p, n) == 1; });
  const auto lemma_ii_gen = n_and_p(2, 24, [](long n, long p) { return n % 2 == 0 && is_odd(p) && std::gcd(p, n / 2) == 1; });
  cs.push_back(identity_case({"lemma-easy-i", "csc^2 over p-scaled odd multiples of pi/n, odd n",
                              "n odd >= 3, gcd(p, n) = 1", "odd n = 3..21, 1 <= p <= 2n"},
                             sum_text("0..(n-3)/2", "1/sin(p*(2*k+1)*pi/n)^2") + " = (n^2-1)/6", odd_n_coprime_p, lemma_i_gen));
  cs.push_back(chain_case(
      {"lemma-easy-i-decomposition", "csc^2 over p-scaled odd multiples as full sum minus half the doubled sum",
       "n odd >= 3, gcd(p, n) = 1", "odd n = 3..21, 1 <= p <= 2n"},
      {{"split", sum_text("0..(n-3)/2", "1/sin(p*(2*k+1)*pi/n)^2") +
                     " = sum(l=1..n-1, 1/sin(p*l*pi/n)^2) - 1/2*sum(r=1..n-1, 1/sin(2*p*r*pi/n)^2)"},
       {"full sum", "sum(l=1..n-1, 1/sin(p*l*pi/n)^2) = (n^2-1)/3"},
       {"doubled sum", "sum(r=1..n-1, 1/sin(2*p*r*pi/n)^2) = (n^2-1)/3"}},
      odd_n_coprime_p, lemma_i_gen));
  cs.push_back(identity_case(
      {"lemma-easy-ii", "csc^2 over p-scaled odd multiples of pi/n, even n", "n even, p odd, gcd(p, n/2) = 1",
       "even n = 2..24, odd p <= 2n",
       "summed from k = 0; starting at k = 1 drops 1/sin^2(p*pi/n) (see lemma-easy-ii-k1-refuted)"},
      sum_text("0..n/2-1", "1/sin(p*(2*k+1)*pi/n)^2") + " = n^2/4", even_n_odd_p, lemma_ii_gen));
  cs.push_back(identity_case(
      {"lemma-easy-ii-k1-refuted", "csc^2 over p-scaled odd multiples, even n, from k = 1 (negative control)",
       "n even, p odd, gcd(p, n/2) = 1", "even n = 2..24, odd p <= 2n", "expected refuted at every binding"},
      sum_text("1..n/2-1", "1/sin(p*(2*k+1)*pi/n)^2") + " = n^2/4", even_n_odd_p, lemma_ii_gen, Verdict::Refuted));
  cs.push_back(chain_case(
      {"lemma-easy-ii-decomposition", "csc^2 over p-scaled odd multiples as full sum minus the even-index sum",
       "n even, p odd, gcd(p, n/2) = 1", "even n = 2..24, odd p <= 2n", "k = 0 start"},
      {{"split", sum_text("0..n/2-1", "1/sin(p*(2*k+1)*pi/n)^2") +
                     " = sum(l=1..n-1, 1/sin(p*l*pi/n)^2) - sum(r=1..n/2-1, 1/sin(2*p*r*pi/n)^2)"},
       {"full sum", "sum(l=1..n-1, 1/sin(p*l*pi/n)^2) = (n^2-1)/3"},
       {"even-index sum", "sum(r=1..n/2-1, 1/sin(2*p*r*pi/n)^2) = ((n/2)^2-1)/3"}},
      even_n_odd_p, lemma_ii_gen));
  cs.push_back(identity_case({"in-passing", "csc^2 over all p-scaled multiples of pi/n", "gcd(p, n) = 1",
                              "n = 2..24, 1 <= p <= 2n"},
                             "sum(l=1..n-1, 1/sin(p*l*pi/n)^2) = (n^2-1)/3", coprime_p,
                             n_and_p(2, 24, [](long n, long p) { return std::gcd(p, n) == 1; })));

  // -- alternating sin^2 closed forms --------------------------------------
  cs.push_back(identity_case(
      {"conjecture-1", "alternating sin^2 sum over odd multiples of pi/(8k+2), closed form", "k >= 1", "k = 1..30"},
      "sum(j=0..2*k-1, (-1)^j*sin((2*j+1)*pi/(8*k+2))^2) = -sin(2*k*pi/(4*k+1))^2/(2*cos(pi/(4*k+1)))",
      param_is("k", [](long k) { return k >= 1; }), one_param("k", 1, 30, any)));
  cs.push_back(identity_case(
      {"conjecture-2", "alternating sin^2 sum over odd multiples of pi/(8k+6), closed form", "k >= 1", "k = 1..30"},
      "sum(j=0..2*k, (-1)^j*sin((2*j+1)*pi/(8*k+6))^2) = 1/2 - cos((2*k+1)*pi/(4*k+3))^2/(2*cos(pi/(4*k+3)))",
      param_is("k", [](long k) { return k >= 1; }), one_param("k", 1, 30, any)));
  cs.push_back(custom_case(
      {"conjecture-limits", "limits -1/2 and +1/2 of the two alternating sin^2 sums", "k >= 1", "k = 500",
       "numeric: both enclosures must lie within 0.01 of the limit"},
      Verdict::ConfirmedToPrecision, param_is("k", [](long k) { return k >= 1; }), fixed({{{"k", 500}}}),
      [](const ParamBinding& b) {
        const long k = at(b, "k");
        const IntervalReal s1 = conjecture_sum_enclosure(1, k);
        const IntervalReal s2 = conjecture_sum_enclosure(2, k);
        const IntervalReal tol = IntervalReal::from_bounds(-0.01, 0.01, 128);
        auto within = [&](const IntervalReal& s, const BigRational& limit) {
          const IntervalReal d = s - IntervalReal::point(limit, 128);
          return mpfr_cmp(d.lo().get(), tol.lo().get()) > 0 && mpfr_cmp(d.hi().get(), tol.hi().get()) < 0;
        };
        const bool ok = within(s1, BigRational(-1, 2)) && within(s2, BigRational(1, 2));
        return numeric_report(ok, 128, s1.to_string() + " / " + s2.to_string(), "first sum, second sum");
      }));

  // -- sin/sin alternating sums and the worked n = 13 chain -----------------
  cs.push_back(identity_case(
      {"extra-ident-1", "alternating sin(2x)/sin(x) sum at multiples of pi/n", "n odd >= 3", "odd n = 3..21"},
      "sum(k=1..(n-1)/2, (-1)^(k+1)*sin(2*k*pi/n)/sin(k*pi/n)) = 1",
      param_is("n", [](long n) { return n >= 3 && is_odd(n); }), one_param("n", 3, 21, odd)));
  cs.push_back(identity_case(
      {"extra-ident-2", "alternating sin(x)/sin(2x) sum at multiples of pi/n", "n odd >= 3", "odd n = 3..21",
       "chi_odd((n-1)/2) written as (1-(-1)^((n-1)/2))/2"},
      "sum(k=1..(n-1)/2, (-1)^(k+1)*sin(k*pi/n)/sin(2*k*pi/n)) = (-1)^((n+1)/2)*(n-1)/4 + (1-(-1)^((n-1)/2))/4",
      param_is("n", [](long n) { return n >= 3 && is_odd(n); }), one_param("n", 3, 21, odd)));
  cs.push_back(custom_case(
      {"extra-ident-parity", "both alternating sin quotient sums, right side built from the parity indicator",
       "n odd >= 3", "odd n = 3..21"},
      Verdict::Proved, param_is("n", [](long n) { return n >= 3 && is_odd(n); }), one_param("n", 3, 21, odd),
      [](const ParamBinding& b) {
        auto [r1, r2] = extra_ident_check(at(b, "n"));
        if (r1.verdict != Verdict::Proved) return r1;
        return r2;
      }));
  const std::vector<std::pair<std::string, std::string>> worked = {
      {"worked-13-a", "sin(4*pi/13)/sin(2*pi/13)*sin(6*pi/13)/sin(3*pi/13) - sin(2*pi/13)/sin(pi/13)*sin(3*pi/13)/sin(5*pi/13)"
                      " - sin(5*pi/13)/sin(4*pi/13)*sin(pi/13)/sin(6*pi/13) = 1"},
      {"worked-13-b", "sin(4*pi/13)/sin(2*pi/13)*sin(6*pi/13)/sin(3*pi/13) - sin(2*pi/13)/sin(pi/13)*sin(10*pi/13)/sin(5*pi/13)"
                      " - sin(8*pi/13)/sin(4*pi/13)*sin(12*pi/13)/sin(6*pi/13) = 1"},
      {"worked-13-c", "4*cos(2*pi/13)*cos(3*pi/13) - 4*cos(pi/13)*cos(5*pi/13) - 4*cos(4*pi/13)*cos(6*pi/13) = 1"},
      {"worked-13-d", "2*cos(5*pi/13) + 2*cos(pi/13) - 2*cos(6*pi/13) - 2*cos(4*pi/13) - 2*cos(10*pi/13) - 2*cos(2*pi/13) = 1"},
      {"worked-13-e", "2*sum(k=1..6, (-1)^(k+1)*cos(k*pi/13)) = 1"},
      {"worked-13-f", "2*(cos(pi/13)+cos(3*pi/13)) - 2*(cos(6*pi/13)+cos(2*pi/13)) + 2*(cos(5*pi/13)-cos(4*pi/13)) = 1"},
      {"worked-13-g", "2*(cos(pi/13)+cos(3*pi/13)) - 2*(cos(6*pi/13)+cos(2*pi/13)) - 2*(cos(8*pi/13)+cos(4*pi/13)) = 1"},
      {"worked-13-h", "4*(cos(2*pi/13)*cos(pi/13)) - 4*(cos(4*pi/13)*cos(2*pi/13)) - 4*(cos(6*pi/13)*cos(2*pi/13)) = 1"},
      {"worked-13-i", "sin(4*pi/13)/sin(2*pi/13)*sin(2*pi/13)/sin(pi/13) - sin(8*pi/13)/sin(4*pi/13)*sin(4*pi/13)/sin(2*pi/13)"
                      " - sin(12*pi/13)/sin(6*pi/13)*sin(4*pi/13)/sin(2*pi/13) = 1"},
      {"worked-13-j", "sin(4*pi/13)/sin(pi/13) - sin(8*pi/13)/sin(2*pi/13) - sin(pi/13)/sin(6*pi/13)*sin(4*pi/13)/sin(2*pi/13) = 1"},
  };
  for (const auto& [id, text] : worked) {
    cs.push_back(identity_case({id, "sin-quotient identity at n = 13 and its regroupings", "none", "single instance"}, text,
                               no_params, fixed({ParamBinding{}})));
  }

  // -- product formula ------------------------------------------------------
  cs.push_back(identity_case(
      {"sin-product", "sin(n x) as 2^(n-1) times a product of shifted sines", "n >= 1, x = a*pi/b, sin(n x) != 0",
       "n = 1..8, 20 seeded random x per n"},
      "sin(n*a*pi/b) = 2^(n-1)*prod(r=0..n-1, sin(a*pi/b + r*pi/n))", product_formula_ok, product_formula_bindings()));
  cs.push_back(identity_case(
      {"sin-product-csc2", "second logarithmic derivative of the sin product formula",
       "n >= 1, x = a*pi/b, sin(n x) != 0", "n = 1..8, 20 seeded random x per n"},
      "sum(r=1..n-1, 1/sin(a*pi/b + r*pi/n)^2) = n^2/sin(n*a*pi/b)^2 - 1/sin(a*pi/b)^2", product_formula_ok,
      product_formula_bindings()));

  // -- landmarks ------------------------------------------------------------
  cs.push_back(identity_case({"morrie", "Morrie's law", "none", "single instance"},
                             "cos(pi/9)*cos(2*pi/9)*cos(4*pi/9) = 1/8", no_params, fixed({ParamBinding{}})));
  cs.push_back(identity_case({"heptagon", "sin^2/sin cyclic identity at sevenths", "none", "single instance"},
                             "sin(3*pi/7)^2/sin(2*pi/7) - sin(2*pi/7)^2/sin(pi/7) + sin(pi/7)^2/sin(3*pi/7) = 0",
                             no_params, fixed({ParamBinding{}})));
  VerifyOptions gauss_options;
  gauss_options.mode = Mode::Numeric;
  gauss_options.start_precision = 256;
  gauss_options.precision_target = 200;
  cs.push_back(identity_case(
      {"gauss-17", "Gauss: cos(pi/17) in nested radicals", "none", "single instance",
       "numeric only: confirmed, not proved (enclosure narrower than 2^-200 from 256 bits)"},
      "cos(pi/17) = (1 - sqrt(17) + sqrt(34-2*sqrt(17)) + 2*sqrt(17+3*sqrt(17)+sqrt(34-2*sqrt(17))+2*sqrt(34+2*sqrt(17))))/16",
      no_params, fixed({ParamBinding{}}), Verdict::ConfirmedToPrecision, gauss_options));

  // -- digit sums and Dirichlet series --------------------------------------
  std::vector<ParamBinding> shevelev_pairs;
  for (auto [n, pmax] : std::vector<std::pair<long, long>>{{3, 5}, {5, 3}, {7, 2}, {9, 2}}) {
    for (long p = 1; p <= pmax; ++p) shevelev_pairs.push_back({{"n", n}, {"p", p}});
  }
  cs.push_back(custom_case(
      {"shevelev", "Shevelev: signed base-(n-1) digit sums over multiples of n vs tangent power sums",
       "n odd >= 3, p >= 1, (n-1)^(2p) <= 10^7", "(3,1..5), (5,1..3), (7,1..2), (9,1..2)"},
      Verdict::Proved,
      [](const ParamBinding& b) { return has(b, {"n", "p"}) && at(b, "n") >= 3 && is_odd(at(b, "n")) && at(b, "p") >= 1; },
      [shevelev_pairs](std::optional<long> nmax) {
        std::vector<ParamBinding> out;
        for (const auto& b : shevelev_pairs) {
          if (!nmax || b.at("n") <= *nmax) out.push_back(b);
        }
        return out;
      },
      [](const ParamBinding& b) {
        const auto start = std::chrono::steady_clock::now();
        const ShevelevReport s = shevelev_check(at(b, "n"), at(b, "p"));
        VerifyReport r;
        r.verdict = s.equal ? Verdict::Proved : Verdict::Refuted;
        if (!s.equal) r.witness = "count " + s.digit_count.to_string() + " vs " + s.tangent_side.to_string();
        std::ostringstream d;
        d << "S = " << s.digit_count.to_string() << ", lambda = " << s.lambda << ", ratio = " << s.normalized_ratio;
        r.detail = d.str();
        r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        return r;
      }));
  cs.push_back(custom_case(
      {"franke", "Franke: cot^2(m pi/N)/m^2 series against its closed form", "N >= 3", "N in {3, 4, 5, 6, 10}",
       "numeric: closed form must lie in [P, P + tail] at 128 bits"},
      Verdict::ConfirmedToPrecision, param_is("N", [](long N) { return N >= 3; }),
      fixed({{{"N", 3}}, {{"N", 4}}, {{"N", 5}}, {{"N", 6}}, {{"N", 10}}}),
      [](const ParamBinding& b) {
        const FrankeReport f = franke_check(at(b, "N"));
        return numeric_report(f.enclosed, 128, f.partial, "T = " + std::to_string(f.terms) + ", closed form " + f.closed_form);
      }));

  std::sort(cs.begin(), cs.end(), [](const SuiteCase& x, const SuiteCase& y) { return x.id < y.id; });
  return cs;
}

}  // namespace

const std::vector<SuiteCase>& suite_catalog() {
  static const std::vector<SuiteCase> catalog = build_catalog();
  return catalog;
}

const SuiteCase& find_case(std::string_view id) {
  for (const auto& c : suite_catalog()) {
    if (c.id == id) return c;
  }
  throw DomainError("unknown case id '" + std::string(id) + "'");
}

std::vector<const SuiteCase*> select_cases(std::string_view filter) {
  std::vector<const SuiteCase*> out;
  for (const auto& c : suite_catalog()) {
    if (std::string_view(c.id).substr(0, filter.size()) == filter) out.push_back(&c);
  }
  if (out.empty()) throw DomainError("no case id starts with '" + std::string(filter) + "'");
  return out;
}

std::string binding_string(const ParamBinding& b) {
  std::string out;
  for (const auto& [name, value] : b) {
    if (!out.empty()) out += ", ";
    out += name + "=" + std::to_string(value);
  }
  return out.empty() ? "(no parameters)" : out;
}

CaseResult run_case(const SuiteCase& c, const ParamBinding& binding) {
  CaseResult res;
  if (!c.holds(binding)) {
    res.status = CaseStatus::Skipped;
    res.detail = "hypothesis not satisfied at " + binding_string(binding);
    return res;
  }
  try {
    res.report = c.run(binding);
  } catch (const std::exception& e) {
    res.status = CaseStatus::Failed;
    res.detail = binding_string(binding) + ": " + e.what();
    return res;
  }
  if (res.report->verdict == c.expected) {
    res.status = CaseStatus::Passed;
  } else {
    res.status = CaseStatus::Failed;
    res.detail = binding_string(binding) + ": expected " + std::string(verdict_name(c.expected)) + ", got " +
                 res.report->summary();
  }
  return res;
}

SweepReport sweep(const SuiteCase& c, std::optional<long> nmax) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.id = c.id;
  rep.source = c.source;
  rep.note = c.note;
  for (const auto& b : c.bindings(nmax)) {
    const CaseResult r = run_case(c, b);
    ++rep.bindings_run;
    switch (r.status) {
      case CaseStatus::Passed: ++rep.passed; break;
      case CaseStatus::Skipped: ++rep.skipped; break;
      case CaseStatus::Failed:
        ++rep.failed;
        if (!rep.first_failure) rep.first_failure = r.detail;
        break;
    }
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

}  // namespace trigsum
