#include "implicitus/config.hpp"

#include "implicitus/errors.hpp"

namespace implicitus {

namespace {

std::set<std::string> string_set(const nlohmann::json& j, const char* name) {
  if (!j.is_array()) throw InputError(std::string("rules: '") + name + "' must be an array of strings");
  std::set<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(std::string("rules: '") + name + "' must be an array of strings");
    out.insert(e.get<std::string>());
  }
  return out;
}

std::string string_value(const nlohmann::json& j, const char* name) {
  if (!j.is_string() || j.get<std::string>().empty())
    throw InputError(std::string("rules: '") + name + "' must be a non-empty string");
  return j.get<std::string>();
}

}  // namespace

RulesConfig RulesConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("rules file must hold a JSON object");
  RulesConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "unitId") {
      c.unitId = SymbolId(string_value(value, "unitId"));
    } else if (key == "functionId") {
      c.functionId = SymbolId(string_value(value, "functionId"));
    } else if (key == "constraintIds") {
      c.constraintIds.clear();
      for (auto& s : string_set(value, "constraintIds")) c.constraintIds.insert(SymbolId(s));
    } else if (key == "stdlibArtifact") {
      c.stdlibArtifact = string_value(value, "stdlibArtifact");
    } else if (key == "testFrameworks") {
      c.testFrameworks = string_set(value, "testFrameworks");
    } else {
      throw InputError("rules: unknown key '" + key + "'");
    }
  }
  return c;
}

nlohmann::json RulesConfig::to_json() const {
  nlohmann::json constraints = nlohmann::json::array();
  for (const auto& id : constraintIds) constraints.push_back(id.value);
  return {{"unitId", unitId.value},
          {"functionId", functionId.value},
          {"constraintIds", std::move(constraints)},
          {"stdlibArtifact", stdlibArtifact},
          {"testFrameworks", testFrameworks}};
}

}  // namespace implicitus
