#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "support/oracles.hpp"
#include "trigsum/cli.hpp"
#include "trigsum/format.hpp"
#include "trigsum/power_sums.hpp"

using namespace trigsum;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Canonical factor ordering: the content and the linear factors n+1, n, n-1
// stay as written; every other parenthesized factor is multiplied out into
// one expanded factor.
std::string canonical_display(const std::string& text) {
  static const std::regex shape(R"(^(-?\d*)((?:\(n\+1\)|\(n-1\)|n\^\d+|n(?![\^+\-\d]))*)((?:\([^)]*\))*)(/\d+)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) return text;
  const std::string rest = m[3];
  if (std::count(rest.begin(), rest.end(), '(') <= 1) return text;
  const UniPoly expanded = oracle::parse_display_polynomial(rest);
  return m[1].str() + m[2].str() + "(" + compact_poly_string(expanded) + ")" + m[4].str();
}

const std::filesystem::path kGolden = TRIGSUM_GOLDEN_DIR;

}  // namespace

TEST(CliVerify, ExitCodes) {
  CliRun r = cli({"verify", "cos(pi/9)*cos(2*pi/9)*cos(4*pi/9) = 1/8"});
  EXPECT_EQ(r.code, exit_code::kPass);
  EXPECT_EQ(r.out, "proved (exact, conductor 36)\n");

  r = cli({"verify", "sin(3*pi/7)^2/sin(2*pi/7) - sin(2*pi/7)^2/sin(pi/7) + sin(pi/7)^2/sin(3*pi/7) = 0"});
  EXPECT_EQ(r.code, exit_code::kPass);

  r = cli({"verify", "sin(pi/6) = 1/3"});
  EXPECT_EQ(r.code, exit_code::kFail);
  EXPECT_NE(r.out.find("witness 1/6"), std::string::npos);

  r = cli({"verify", "sin(pi/6 = 1/3"});
  EXPECT_EQ(r.code, exit_code::kParse);
  EXPECT_NE(r.err.find("position 9"), std::string::npos);

  EXPECT_EQ(cli({"verify", "csc(pi) = 1"}).code, exit_code::kInconclusive);
  EXPECT_EQ(cli({"verify", "sin(pi/n) = 0"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"verify", "sin(pi/n) = 0", "--param", "n"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"verify", "sin(pi/n) = 0", "--param", "n=x"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"verify", "sin(pi/n) = 0", "--param", "n=1"}).code, exit_code::kPass);
  EXPECT_EQ(cli({"verify", "1 = 1", "--mode", "fuzzy"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"--help"}).code, exit_code::kPass);
}

TEST(CliVerify, NumericModeAndParameters) {
  CliRun r = cli({"verify", "sqrt(2)^2 = 2", "--mode", "numeric", "--prec", "128"});
  EXPECT_EQ(r.code, exit_code::kPass);
  EXPECT_NE(r.out.find("confirmed-to-precision"), std::string::npos);
  r = cli({"verify", "sum(k=1..n-1, 1/sin(k*pi/n)^2) = (n^2-1)/3", "--param", "n=12"});
  EXPECT_EQ(r.code, exit_code::kPass);
}

TEST(CliDerive, PublishedTableGoldens) {
  for (const char* family : {"Ton", "Ten", "Uon", "Uen"}) {
    std::string lower = family;
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    const auto golden = lines_of(read_file(kGolden / ("derive_" + lower + ".txt")));
    ASSERT_EQ(golden.size(), 5u) << family;
    const CliRun r = cli({"derive", "--family", family, "--kmax", "5"});
    ASSERT_EQ(r.code, exit_code::kPass);
    const auto derived = lines_of(r.out);
    ASSERT_EQ(derived.size(), 5u);
    const auto formulas = newton_power_sums(*parse_family(family), 5);
    for (std::size_t i = 0; i < 5; ++i) {
      const std::string prefix = std::string(family) + "_" + std::to_string(i + 1) + "(n) = ";
      ASSERT_EQ(golden[i].rfind(prefix, 0), 0u) << golden[i];
      const std::string expected = golden[i].substr(prefix.size());
      EXPECT_EQ(oracle::parse_display_polynomial(expected), formulas[i].poly) << golden[i];
      EXPECT_EQ(derived[i], prefix + canonical_display(expected));
    }
  }
}

TEST(CliDerive, ExamplesAndJson) {
  EXPECT_EQ(cli({"derive", "--family", "Ten", "--k", "1"}).out, "Ten_1(n) = 2n^2\n");
  EXPECT_EQ(cli({"derive", "--family", "Top", "--k", "3"}).out, "Top_3(n) = 5(2n+1)/32\n");
  const CliRun r = cli({"derive", "--family", "Ton", "--k", "2", "--format", "json"});
  ASSERT_EQ(r.code, exit_code::kPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["family"], "Ton");
  EXPECT_EQ(j["k"], 2);
  // 8(n+1)n(n^2+n+3)/45 = (8n^4 + 16n^3 + 32n^2 + 24n)/45
  EXPECT_EQ(j["coeffs"], nlohmann::json({"0/1", "8/15", "32/45", "16/45", "8/45"}));
  EXPECT_EQ(j["display"], "8(n+1)n(n^2+n+3)/45");
  EXPECT_EQ(cli({"derive", "--family", "Ton", "--k", "2", "--format", "json"}).out, r.out);
}

TEST(CliDerive, Limits) {
  EXPECT_EQ(cli({"derive", "--family", "Ton", "--k", "0"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"derive", "--family", "Ton", "--k", "61"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"derive", "--family", "Ton"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"derive", "--family", "Nope", "--k", "1"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"derive", "--family", "Ton", "--k", "1", "--kmax", "2"}).code, exit_code::kUsage);
}

TEST(CliTable, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "trigsum_table_test.json";
  const CliRun r = cli({"table", "--families", "Ton,Uen", "--kmax", "3", "--out", path.string(), "--format", "json"});
  ASSERT_EQ(r.code, exit_code::kPass);
  const auto j = nlohmann::json::parse(read_file(path));
  ASSERT_EQ(j.size(), 6u);
  EXPECT_EQ(j[3]["family"], "Uen");
  EXPECT_EQ(j[3]["display"], "2(n+1)n");
  std::filesystem::remove(path);
  EXPECT_EQ(cli({"table", "--families", "Ton", "--kmax", "2", "--out", "/nonexistent/dir/x"}).code, exit_code::kUsage);
}

TEST(CliSuite, FilterJsonAndNotes) {
  CliRun r = cli({"suite", "--filter", "bromwich"});
  EXPECT_EQ(r.code, exit_code::kPass);
  EXPECT_NE(r.out.find("4/4 cases passed"), std::string::npos);

  r = cli({"suite", "--filter", "eq08", "--nmax", "8"});
  EXPECT_EQ(r.code, exit_code::kPass);
  EXPECT_NE(r.out.find("note: summed from k = 0"), std::string::npos);

  r = cli({"suite", "--filter", "eq09", "--nmax", "10", "--format", "json"});
  ASSERT_EQ(r.code, exit_code::kPass);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["id"], "eq09");
  for (const char* key : {"id", "paper_ref", "bindings_run", "passed", "skipped", "failed", "first_failure"}) {
    EXPECT_TRUE(j[0].contains(key)) << key;
  }
  EXPECT_TRUE(j[0]["first_failure"].is_null());
  EXPECT_EQ(j[0]["failed"], 0);
  // Timing is not part of the JSON, so it is byte-stable across runs.
  EXPECT_EQ(cli({"suite", "--filter", "eq09", "--nmax", "10", "--format", "json"}).out, r.out);

  EXPECT_EQ(cli({"suite", "--filter", "zzz"}).code, exit_code::kUsage);
}

TEST(CliCatalog, ListsEveryCase) {
  const CliRun r = cli({"catalog", "--format", "json"});
  ASSERT_EQ(r.code, exit_code::kPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j.size(), 40u);
  EXPECT_EQ(j[0].size(), 6u);
  EXPECT_NE(cli({"catalog"}).out.find("hypothesis: n odd"), std::string::npos);
}

TEST(CliTheorems, ShevelevAndFranke) {
  CliRun r = cli({"shevelev", "--n", "3", "--p", "1"});
  EXPECT_EQ(r.code, exit_code::kPass);
  EXPECT_NE(r.out.find("= 2\n"), std::string::npos);
  EXPECT_EQ(cli({"shevelev", "--n", "4", "--p", "1"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"shevelev", "--n", "9", "--p", "5"}).code, exit_code::kInconclusive);
  r = cli({"franke", "--N", "4"});
  EXPECT_EQ(r.code, exit_code::kPass);
  EXPECT_NE(r.out.find("enclosed in"), std::string::npos);
  EXPECT_EQ(cli({"franke", "--N", "2"}).code, exit_code::kUsage);
}
