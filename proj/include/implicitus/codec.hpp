#pragma once

// JSON encoding of the model. Field names follow the facts schema; the same
// encoding is reused inside corpus snapshots.

#include <nlohmann/json.hpp>

#include "implicitus/model.hpp"

namespace implicitus::codec {

using json = nlohmann::json;

// Decoders throw InputError with a short description of the offending field.
// `module` scopes local symbols.

json encode(const TypeRef& t);
TypeRef decode_type_ref(const json& j, const ModuleId& module);

json encode(const ArgumentTree& a);
ArgumentTree decode_argument(const json& j, const ModuleId& module);

json encode(const Range& r);
Range decode_range(const json& j);

json encode_signature(const Declaration& d);
Signature decode_signature(const json& j, DeclKind kind, const ModuleId& module);

json encode(const ParamList& p);
ParamList decode_param_list(const json& j, const ModuleId& module);

json encode(const Declaration& d);
Declaration decode_declaration(const json& j);

json encode(const CallSite& c);
CallSite decode_callsite(const json& j);

json encode(const ProjectMeta& p);
ProjectMeta decode_project(const json& j);

json encode(const ModuleMeta& m);
ModuleMeta decode_module(const json& j);

SymbolId decode_symbol(const json& j, const ModuleId& module);

// Typed field accessors used by the other decoders.
const json& field(const json& j, const char* name);
std::string string_field(const json& j, const char* name);
bool bool_field(const json& j, const char* name);
long int_field(const json& j, const char* name);
double number_field(const json& j, const char* name);

}  // namespace implicitus::codec
