#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace implicitus;
using namespace implicitus::testing;

namespace {

ProjectMeta project(long stars, long commits, const char* last, double dup, bool inIndex = false) {
  return ProjectMeta{"p", stars, commits, "2020-01-01", last, dup, inIndex};
}

ModuleMeta module(const char* id, const char* artifact, Platform platform, const char* scala) {
  ModuleMeta m;
  m.id = id;
  m.project = "p";
  m.group = "g";
  m.artifact = artifact;
  m.platform = platform;
  m.scalaVersion = scala;
  return m;
}

}  // namespace

TEST(Dedup, DaysBetweenHandlesLeapYears) {
  EXPECT_EQ(days_between("2020-02-28", "2020-03-01"), 2);
  EXPECT_EQ(days_between("2019-02-28", "2019-03-01"), 1);
  EXPECT_EQ(days_between("2020-01-01", "2020-03-02"), 61);
  EXPECT_EQ(days_between("2021-01-01", "2020-01-01"), -366);
}

TEST(Dedup, MalformedDatesAreInputErrors) {
  for (const char* bad : {"2020-13-01", "2020-02-30", "20-01-01", "2020/01/01", "2020-01-1x", ""})
    EXPECT_THROW(days_between("2020-01-01", bad), InputError) << bad;
}

TEST(Dedup, InvalidProjectsAreInputErrors) {
  EXPECT_THROW(retain_project(project(1, 5, "2019-01-01", 0.1)), InputError);  // last before first
  EXPECT_THROW(retain_project(project(1, 5, "2021-01-01", 1.5)), InputError);
  EXPECT_THROW(retain_project(project(1, 5, "2021-01-01", -0.1)), InputError);
}

TEST(Dedup, ActivityBoundaryIsSixtyOneDays) {
  EXPECT_TRUE(retain_project(project(10, 5, "2020-03-02", 0.1)).retained);   // 61 days
  auto v = retain_project(project(10, 5, "2020-03-01", 0.1));                 // 60 days
  EXPECT_EQ(v.failedRules, std::set{RetentionRule::R2Activity});
}

TEST(Dedup, DuplicationRulesUseStarsAndIndex) {
  EXPECT_EQ(retain_project(project(5, 5, "2021-01-01", 0.75)).failedRules, std::set{RetentionRule::R3Dup75});
  EXPECT_TRUE(retain_project(project(6, 5, "2021-01-01", 0.75)).retained);
  EXPECT_EQ(retain_project(project(6, 5, "2021-01-01", 0.80)).failedRules, std::set{RetentionRule::R4Dup80});
  EXPECT_TRUE(retain_project(project(501, 5, "2021-01-01", 0.95)).retained);
  EXPECT_TRUE(retain_project(project(0, 5, "2021-01-01", 1.0, true)).retained);
  EXPECT_EQ(retain_project(project(0, 1, "2021-01-01", 0.0)).failedRules, std::set{RetentionRule::R1Commits});
}

TEST(Dedup, ScalaVersionsCompareNumerically) {
  EXPECT_GT(compare_scala_versions("2.13.12", "2.13.9"), 0);
  EXPECT_LT(compare_scala_versions("2.12.17", "2.13.0"), 0);
  EXPECT_GT(compare_scala_versions("3.3.1", "2.13.12"), 0);
  EXPECT_EQ(compare_scala_versions("2.13", "2.13.0"), 0);
  EXPECT_EQ(compare_scala_versions("3.3.0-RC1", "3.3.0"), 0);
  EXPECT_LT(compare_scala_versions("garbage", "2.10.0"), 0);
  EXPECT_EQ(compare_scala_versions("", "x"), 0);
}

TEST(Dedup, CanonicalModulePrefersJvmThenNewestScala) {
  std::vector mods{module("a-js", "core", Platform::JS, "3.3.1"), module("a-212", "core", Platform::JVM, "2.12.17"),
                   module("a-213", "core", Platform::JVM, "2.13.12"), module("b-nat", "cli", Platform::Native, "3.3.1"),
                   module("b-js", "cli", Platform::JS, "2.13.12")};
  EXPECT_EQ(canonical_modules(mods), (std::set<ModuleId>{"a-213", "b-js"}));
}

TEST(Dedup, TiesBreakOnTheSmallestId) {
  std::vector mods{module("z", "core", Platform::JVM, "2.13.12"), module("y", "core", Platform::JVM, "2.13.12")};
  EXPECT_EQ(canonical_modules(mods), (std::set<ModuleId>{"y"}));
}

TEST(Dedup, ModulesWithoutCoordinatesAreKept) {
  std::vector mods{module("x", "", Platform::JS, "2.13.12"), module("y", "", Platform::JVM, "2.13.12")};
  mods[0].group.clear();
  mods[1].group.clear();
  EXPECT_EQ(canonical_modules(mods), (std::set<ModuleId>{"x", "y"}));
}

TEST(Dedup, DeskManifestDecisions) {
  ParsedFacts f = parse_fact_files({fixture("desk/projects.jsonl")}).front();
  auto decisions = decide_projects(f.projects, f.modules);
  auto expected = read_json(fixture("desk/expected_labels.json"));
  ASSERT_EQ(decisions.size(), 4u);
  for (const auto& d : decisions) {
    if (expected["projects"].contains(d.project)) {
      EXPECT_TRUE(d.verdict.retained) << d.project;
      std::set<ModuleId> mods;
      for (const auto& m : expected["projects"][d.project]["modules"]) mods.insert(m.get<std::string>());
      EXPECT_EQ(d.canonicalModules, mods) << d.project;
    } else {
      EXPECT_FALSE(d.verdict.retained) << d.project;
      std::set<std::string> rules;
      for (auto r : d.verdict.failedRules) rules.insert(std::string(to_string(r)));
      std::set<std::string> want;
      for (const auto& r : expected["rejected"][d.project]) want.insert(r.get<std::string>());
      EXPECT_EQ(rules, want) << d.project;
    }
  }
}
