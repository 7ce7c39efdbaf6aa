#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace implicitus;
using namespace implicitus::testing;

namespace {

SyntheticRecord record(SyntheticTree tree, std::string path = "Unit.scala") {
  return SyntheticRecord{"m", std::move(path), PathKind::Main, std::move(tree)};
}

SymbolTable table_with(std::initializer_list<const char*> values) {
  SymbolTable t = prelude_table();
  for (const char* v : values) t.put(val(v, ref("scala/Int#"), true));
  t.put(def("a/F.f().", {params({param("x", ref("scala/Int#"))}), params({param("i", ref("scala/Int#"))}, true)},
            ref("scala/Int#")));
  return t;
}

}  // namespace

TEST(Extract, FutureApplyGetsItsCalleeFromTheFunctionSynthetic) {
  Corpus c = ingest_fixtures({"future.jsonl"});
  ASSERT_EQ(c.callsites.size(), 1u);
  const CallSite& cs = c.callsites.front();
  EXPECT_EQ(cs.callee.value, "Future.apply()");
  EXPECT_EQ(cs.typeArgs, std::vector<TypeRef>{ref("Int")});
  ASSERT_EQ(cs.implicitArgs.size(), 1u);
  EXPECT_EQ(cs.implicitArgs.front(), ArgumentTree::value(SymbolId("EC.global")));
  EXPECT_FALSE(cs.wholeCallSynthetic);
  EXPECT_EQ(cs.location.range, (Range{1, 60, 1, 86}));
}

TEST(Extract, TupleComparisonInjectsFourNodes) {
  Corpus c = ingest_fixtures({"stdlib.jsonl", "tuple.jsonl"});
  ASSERT_EQ(c.callsites.size(), 1u);
  const CallSite& cs = c.callsites.front();
  EXPECT_TRUE(cs.wholeCallSynthetic);
  EXPECT_EQ(cs.callee.value, "scala/math/Ordered.orderingToOrdered().");
  EXPECT_EQ(injected_count(cs), 4);
  EXPECT_EQ(injected_text(cs), "orderingToOrdered(Tuple2(Int,Int))");
}

TEST(Extract, DeckConversionGoesThroughTheFunctionValue) {
  Corpus c = ingest_fixtures({"stdlib.jsonl", "deck.jsonl"});
  ASSERT_EQ(c.callsites.size(), 2u);
  const CallSite* conversion = nullptr;
  const CallSite* call = nullptr;
  for (const auto& cs : c.callsites) (cs.wholeCallSynthetic ? conversion : call) = &cs;
  ASSERT_TRUE(conversion && call);
  EXPECT_EQ(conversion->callee.value, "deck/Deck.deck.");
  EXPECT_EQ(conversion->location.range, (Range{8, 3, 8, 4}));
  EXPECT_EQ(call->callee.value, "deck/Card#isInDeck().");
  EXPECT_EQ(call->implicitArgs, std::vector{ArgumentTree::value(SymbolId("deck/Deck.deck."))});
}

TEST(Extract, NestedInjectedApplicationsBecomeCalls) {
  SymbolTable t = table_with({"a/V.x."});
  t.put(def("a/F.g().", {params({param("i", ref("scala/Int#"))}, true)}, ref("scala/Int#"), {}, true));
  auto tree = SyntheticTree::apply(
      SyntheticTree::original({2, 1, 2, 9}, SymbolId("a/F.f().")),
      {SyntheticTree::apply(SyntheticTree::type_apply(SyntheticTree::id(SymbolId("a/F.g().")), {ref("scala/Int#")}),
                            {SyntheticTree::id(SymbolId("a/V.x."))})});
  std::vector records{record(tree)};
  auto sites = callsites_from_synthetics(records, t);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].implicitArgs,
            std::vector{ArgumentTree::call(SymbolId("a/F.g()."), {ref("scala/Int#")},
                                           {ArgumentTree::value(SymbolId("a/V.x."))})});
  EXPECT_EQ(injected_text(sites[0]), "g[Int](x)");
}

TEST(Extract, ImplicitArgumentsOnAConversionJoinTheConversion) {
  SymbolTable t = table_with({"a/V.x."});
  t.put(def("a/C.conv().", {params({param("v", ref("scala/Int#"))}), params({param("i", ref("scala/Int#"))}, true)},
            ref("java/lang/String#"), {}, true));
  auto tree = SyntheticTree::apply(
      SyntheticTree::apply(SyntheticTree::id(SymbolId("a/C.conv().")), {SyntheticTree::original({4, 2, 4, 7})}),
      {SyntheticTree::id(SymbolId("a/V.x."))});
  std::vector records{record(tree)};
  auto sites = callsites_from_synthetics(records, t);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_TRUE(sites[0].wholeCallSynthetic);
  EXPECT_EQ(sites[0].location.range, (Range{4, 2, 4, 7}));
  EXPECT_EQ(injected_text(sites[0]), "conv(x)");
  EXPECT_EQ(injected_count(sites[0]), 2);
}

TEST(Extract, SyntheticsWithoutInjectedArgumentsAreDropped) {
  SymbolTable t = table_with({});
  std::vector records{record(SyntheticTree::type_apply(
                          SyntheticTree::select(SyntheticTree::original({1, 1, 1, 5}), SymbolId("a/F.f().")),
                          {ref("scala/Int#")})),
                      record(SyntheticTree::original({1, 1, 1, 5}))};
  EXPECT_TRUE(callsites_from_synthetics(records, t).empty());
}

TEST(Extract, UnknownSymbolsInTreesAreInconsistent) {
  SymbolTable t = table_with({});
  std::vector records{record(SyntheticTree::apply(SyntheticTree::original({1, 1, 1, 5}, SymbolId("a/F.f().")),
                                                  {SyntheticTree::id(SymbolId("a/Nowhere.x."))}))};
  EXPECT_THROW(callsites_from_synthetics(records, t), InconsistencyError);
}

TEST(Extract, UnresolvableCalleeIsInconsistent) {
  SymbolTable t = table_with({"a/V.x."});
  std::vector records{
      record(SyntheticTree::apply(SyntheticTree::original({1, 1, 1, 5}), {SyntheticTree::id(SymbolId("a/V.x."))}))};
  EXPECT_THROW(callsites_from_synthetics(records, t), InconsistencyError);
}

TEST(Extract, FunctionSyntheticsOnlyResolveWithinTheirUnit) {
  SymbolTable t = table_with({"a/V.x."});
  std::vector records{
      record(SyntheticTree::select(SyntheticTree::original({1, 1, 1, 4}), SymbolId("a/F.f().")), "Other.scala"),
      record(SyntheticTree::apply(SyntheticTree::original({1, 1, 1, 5}), {SyntheticTree::id(SymbolId("a/V.x."))}))};
  EXPECT_THROW(callsites_from_synthetics(records, t), InconsistencyError);
}

TEST(Extract, WidestFunctionSyntheticWins) {
  SymbolTable t = table_with({"a/V.x."});
  t.put(def("a/F.h().", {params({param("i", ref("scala/Int#"))}, true)}, ref("scala/Int#")));
  std::vector records{
      record(SyntheticTree::select(SyntheticTree::original({1, 1, 1, 3}), SymbolId("a/F.h()."))),
      record(SyntheticTree::select(SyntheticTree::original({1, 1, 1, 4}), SymbolId("a/F.f()."))),
      record(SyntheticTree::apply(SyntheticTree::original({1, 1, 1, 5}), {SyntheticTree::id(SymbolId("a/V.x."))}))};
  auto sites = callsites_from_synthetics(records, t);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].callee.value, "a/F.f().");
}

TEST(Extract, ImplicitDeclarationsOfAModuleInSourceOrder) {
  Corpus c = ingest_fixtures({"stdlib.jsonl", "deck.jsonl"});
  auto decls = extract_implicit_declarations("example-deck", c.table);
  ASSERT_EQ(decls.size(), 2u);
  EXPECT_EQ(decls[0].id.value, "deck/Deck.intToCard().");
  EXPECT_EQ(decls[1].id.value, "deck/Deck.deck.");
}
