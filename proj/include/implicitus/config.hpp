#pragma once

#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "implicitus/symbol.hpp"

namespace implicitus {

/// Tunable identifiers used by the classifiers and by origin attribution.
/// Every field has a default; a rules file overrides only what it names:
///
///   {"unitId": "scala/Unit#", "functionId": "scala/Function1#",
///    "constraintIds": [...], "stdlibArtifact": "org.scala-lang:scala-library",
///    "testFrameworks": ["scalatest", ...]}
struct RulesConfig {
  SymbolId unitId{"scala/Unit#"};
  SymbolId functionId{"scala/Function1#"};
  std::set<SymbolId> constraintIds{
      SymbolId("scala/Predef.`=:=`#"), SymbolId("scala/Predef.`<:<`#"),
      SymbolId("scala/`=:=`#"),        SymbolId("scala/`<:<`#"),
      SymbolId("scala/Function1#"),
  };
  std::string stdlibArtifact = "org.scala-lang:scala-library";
  std::set<std::string> testFrameworks{"scalatest", "specs2", "scalacheck", "munit", "utest"};

  static RulesConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  bool operator==(const RulesConfig&) const = default;
};

}  // namespace implicitus
