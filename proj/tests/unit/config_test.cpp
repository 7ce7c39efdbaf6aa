#include <gtest/gtest.h>

#include "implicitus/parallel.hpp"
#include "test_support.hpp"

using namespace implicitus;
using namespace implicitus::testing;

TEST(Config, RulesOverrideOnlyWhatTheyName) {
  auto c = RulesConfig::from_json(nlohmann::json{{"testFrameworks", {"weaver"}}});
  EXPECT_EQ(c.testFrameworks, (std::set<std::string>{"weaver"}));
  EXPECT_EQ(c.unitId, RulesConfig{}.unitId);
  EXPECT_EQ(c.constraintIds, RulesConfig{}.constraintIds);
}

TEST(Config, JsonRoundTrips) {
  RulesConfig c;
  c.stdlibArtifact = "org.scala-lang:scala3-library_3";
  EXPECT_EQ(RulesConfig::from_json(c.to_json()), c);
}

TEST(Config, BadRulesAreInputErrors) {
  EXPECT_THROW(RulesConfig::from_json(nlohmann::json::array()), InputError);
  EXPECT_THROW(RulesConfig::from_json({{"unitId", ""}}), InputError);
  EXPECT_THROW(RulesConfig::from_json({{"constraintIds", {1, 2}}}), InputError);
  try {
    RulesConfig::from_json({{"colour", "red"}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
  }
}

TEST(Coordinates, MetadataWinsOverTheId) {
  Corpus c;
  ModuleMeta m;
  m.id = "x:y:1";
  m.group = "com.acme";
  m.artifact = "shop_2.13";
  c.modules.push_back(m);
  EXPECT_EQ(artifact_of("x:y:1", c)->coordinate(), "com.acme:shop_2.13");
}

TEST(Coordinates, DependencyIdsAreParsed) {
  Corpus c;
  EXPECT_EQ(artifact_of("org.scalatest:scalatest_2.13:3.2.15", c)->coordinate(), "org.scalatest:scalatest_2.13");
  EXPECT_EQ(artifact_of("g:a", c)->coordinate(), "g:a");
  EXPECT_FALSE(artifact_of("jdk", c));
  EXPECT_FALSE(artifact_of(":a:1", c));
  EXPECT_FALSE(artifact_of("g::1", c));
}

TEST(Coordinates, BaseNamesDropCrossBuildSuffixes) {
  EXPECT_EQ(base_artifact_name("scalatest_2.13"), "scalatest");
  EXPECT_EQ(base_artifact_name("munit_sjs1_3"), "munit");
  EXPECT_EQ(base_artifact_name("specs2"), "specs2");
}

TEST(Parallel, EveryIndexRunsOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 8, [&](size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, FirstFailureIsRethrown) {
  EXPECT_THROW(parallel_for(100, 4,
                            [](size_t i) {
                              if (i == 37) throw InputError("boom");
                            }),
               InputError);
  EXPECT_NO_THROW(parallel_for(0, 4, [](size_t) { throw InputError("never"); }));
}
