#include <gtest/gtest.h>

#include <set>

#include "trigsum/errors.hpp"
#include "trigsum/suite.hpp"

using namespace trigsum;

TEST(Catalog, IdsAreUniqueSortedAndDescribed) {
  const auto& cat = suite_catalog();
  ASSERT_GT(cat.size(), 40u);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_TRUE(ids.insert(cat[i].id).second) << cat[i].id;
    if (i > 0) EXPECT_LT(cat[i - 1].id, cat[i].id);
    EXPECT_FALSE(cat[i].source.empty()) << cat[i].id;
    EXPECT_FALSE(cat[i].hypothesis.empty()) << cat[i].id;
    EXPECT_FALSE(cat[i].sweep.empty()) << cat[i].id;
  }
  for (const char* required : {"eq05", "eq06", "eq07", "eq08", "eq09", "eq10", "bromwich-III", "lemma-easy-i", "shevelev",
                               "franke", "extra-ident-1", "cos-progression", "remark-bru", "in-passing", "morrie",
                               "heptagon", "gauss-17", "conjecture-1", "conjecture-2"}) {
    EXPECT_TRUE(ids.count(required)) << required;
  }
}

TEST(Catalog, EveryGeneratedBindingSatisfiesItsHypothesis) {
  for (const auto& c : suite_catalog()) {
    const auto bindings = c.bindings(std::nullopt);
    EXPECT_FALSE(bindings.empty()) << c.id;
    for (const auto& b : bindings) EXPECT_TRUE(c.holds(b)) << c.id << " at " << binding_string(b);
  }
}

TEST(Catalog, SelectionAndLookup) {
  EXPECT_EQ(select_cases("bromwich").size(), 4u);
  EXPECT_EQ(find_case("eq06").id, "eq06");
  EXPECT_THROW(find_case("nope"), DomainError);
  EXPECT_THROW(select_cases("zzz"), DomainError);
  EXPECT_EQ(select_cases("").size(), suite_catalog().size());
}

TEST(RunCase, Examples) {
  const CaseResult eq06 = run_case(find_case("eq06"), {{"k", 5}});
  EXPECT_EQ(eq06.status, CaseStatus::Passed);
  EXPECT_EQ(eq06.report->verdict, Verdict::Proved);
  EXPECT_EQ(run_case(find_case("bromwich-I"), {{"n", 7}}).status, CaseStatus::Passed);
  EXPECT_EQ(run_case(find_case("remark-bru"), {{"n", 6}}).status, CaseStatus::Passed);
}

TEST(RunCase, HypothesisViolationsAreSkipped) {
  EXPECT_EQ(run_case(find_case("eq05"), {{"k", 4}}).status, CaseStatus::Skipped);
  EXPECT_EQ(run_case(find_case("eq05"), {{"k", 1}}).status, CaseStatus::Skipped);
  EXPECT_EQ(run_case(find_case("eq07"), {{"n", 9}, {"j", 6}, {"p", 3}}).status, CaseStatus::Skipped);
  EXPECT_EQ(run_case(find_case("eq08"), {{"n", 8}, {"j", 4}, {"p", 2}}).status, CaseStatus::Skipped);
  EXPECT_EQ(run_case(find_case("bromwich-II"), {{"n", 7}}).status, CaseStatus::Skipped);
  EXPECT_EQ(run_case(find_case("eq10"), {{"n", 9}}).status, CaseStatus::Skipped);
}

TEST(RunCase, IndexConventionForEq08) {
  const ParamBinding b{{"n", 10}, {"j", 6}, {"p", 3}};
  EXPECT_EQ(run_case(find_case("eq08"), b).report->verdict, Verdict::Proved);
  EXPECT_EQ(run_case(find_case("eq08-k1-offset"), b).report->verdict, Verdict::Proved);
  const CaseResult k1 = run_case(find_case("eq08-k1-refuted"), b);
  EXPECT_EQ(k1.report->verdict, Verdict::Refuted);
  EXPECT_EQ(k1.status, CaseStatus::Passed);
  EXPECT_NE(find_case("eq08").note.find("k = 0"), std::string::npos);
}

TEST(RunCase, RevisitChainsReportEachStep) {
  const CaseResult r = run_case(find_case("eq09-revisit"), {{"n", 10}, {"j", 2}, {"p", 1}});
  ASSERT_EQ(r.status, CaseStatus::Passed);
  EXPECT_NE(r.report->detail.find("split: proved"), std::string::npos);
  EXPECT_NE(r.report->detail.find("combine: proved"), std::string::npos);
}

TEST(Sweep, SmallRangesAreDeterministic) {
  const SweepReport a = sweep(find_case("eq07"), 9);
  const SweepReport b = sweep(find_case("eq07"), 9);
  EXPECT_EQ(a.bindings_run, b.bindings_run);
  EXPECT_EQ(a.passed, a.bindings_run);
  EXPECT_EQ(a.failed, 0);
  EXPECT_FALSE(a.first_failure.has_value());
  EXPECT_LT(sweep(find_case("eq07"), 5).bindings_run, a.bindings_run);
}
