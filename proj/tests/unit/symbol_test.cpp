#include <gtest/gtest.h>

#include "implicitus/symbol.hpp"

using namespace implicitus;

TEST(Symbol, LocalSymbolsAreRecognized) {
  EXPECT_TRUE(is_local_symbol("local0"));
  EXPECT_TRUE(is_local_symbol("local17"));
  EXPECT_FALSE(is_local_symbol("local"));
  EXPECT_FALSE(is_local_symbol("localx"));
  EXPECT_FALSE(is_local_symbol("pkg/local1."));
}

TEST(Symbol, DescriptorsOfAMethodTypeParameter) {
  auto parts = parse_descriptors("scala/collection/immutable/List#flatten().[B]");
  ASSERT_EQ(parts.size(), 6u);
  EXPECT_EQ(parts[0].kind, Descriptor::Kind::Package);
  EXPECT_EQ(parts[3].kind, Descriptor::Kind::Type);
  EXPECT_EQ(parts[3].name, "List");
  EXPECT_EQ(parts[4].kind, Descriptor::Kind::Method);
  EXPECT_EQ(parts[4].text, "flatten().");
  EXPECT_EQ(parts[5].kind, Descriptor::Kind::TypeParameter);
  EXPECT_EQ(parts[5].name, "B");
}

TEST(Symbol, BackquotedNamesAreUnquoted) {
  EXPECT_EQ(simple_name("scala/`=:=`#"), "=:=");
  EXPECT_EQ(simple_name("scala/Predef.`<:<`#"), "<:<");
  EXPECT_EQ(simple_name("scala/concurrent/Future.apply()."), "apply");
  EXPECT_EQ(simple_name("EC.global"), "global");
}

TEST(Symbol, OwnerDropsTheLastDescriptor) {
  EXPECT_EQ(owner_of("pkg/List#flatten()."), "pkg/List#");
  EXPECT_EQ(owner_of("pkg/List#flatten().[B]"), "pkg/List#flatten().");
  EXPECT_EQ(owner_of("pkg/Obj.Inner#m()."), "pkg/Obj.Inner#");
  EXPECT_EQ(owner_of("local3"), "");
  EXPECT_EQ(owner_of("Int"), "");
}

TEST(Symbol, MalformedTailsNeverThrow) {
  for (const char* s : {"pkg/Foo#bar(", "pkg/`open", "[", "(", "a/b]c", ""}) {
    EXPECT_NO_THROW(parse_descriptors(s)) << s;
    EXPECT_NO_THROW(simple_name(s)) << s;
  }
}

TEST(Symbol, ScopedSymbolsDifferAcrossModules) {
  SymbolId a("local1", "m1"), b("local1", "m2"), c("local1", "m1");
  EXPECT_NE(a, b);
  EXPECT_EQ(a, c);
  EXPECT_TRUE(a.moduleScoped());
  EXPECT_NE(std::hash<SymbolId>{}(a), std::hash<SymbolId>{}(b));
}
