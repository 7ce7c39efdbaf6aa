#include "implicitus/codec.hpp"

#include "implicitus/errors.hpp"

namespace implicitus::codec {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw InputError("expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw InputError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

bool bool_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_boolean()) throw InputError(std::string("field '") + name + "' must be a boolean");
  return v.get<bool>();
}

long int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + name + "' must be an integer");
  return v.get<long>();
}

double number_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number()) throw InputError(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

namespace {

using codec::encode;  // keep the public overloads visible next to the local ones

bool optional_bool(const json& j, const char* name, bool fallback) {
  return j.contains(name) ? bool_field(j, name) : fallback;
}

const json& array_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) throw InputError(std::string("field '") + name + "' must be an array");
  return v;
}

template <typename E>
E enum_field(const json& j, const char* name, std::optional<E> (*parse)(std::string_view)) {
  std::string s = string_field(j, name);
  auto e = parse(s);
  if (!e) throw InputError(std::string("invalid ") + name + " '" + s + "'");
  return *e;
}

template <typename E>
E optional_enum(const json& j, const char* name, std::optional<E> (*parse)(std::string_view), E fallback) {
  return j.contains(name) ? enum_field(j, name, parse) : fallback;
}

std::vector<TypeRef> decode_type_refs(const json& j, const ModuleId& module) {
  if (!j.is_array()) throw InputError("type argument list must be an array");
  std::vector<TypeRef> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(decode_type_ref(e, module));
  return out;
}

json encode(const std::vector<TypeRef>& ts) {
  json arr = json::array();
  for (const auto& t : ts) arr.push_back(encode(t));
  return arr;
}

std::vector<SymbolId> decode_symbols(const json& j, const ModuleId& module) {
  if (!j.is_array()) throw InputError("symbol list must be an array");
  std::vector<SymbolId> out;
  for (const auto& e : j) out.push_back(decode_symbol(e, module));
  return out;
}

json encode(const std::vector<SymbolId>& ids) {
  json arr = json::array();
  for (const auto& id : ids) arr.push_back(id.value);
  return arr;
}

Location decode_location(const json& j, bool withScope) {
  Location loc;
  loc.path = string_field(j, "path");
  loc.unit = loc.path;
  loc.range = decode_range(field(j, "range"));
  loc.scope = withScope ? optional_enum(j, "scope", parse_scope, Scope::TopLevel) : Scope::TopLevel;
  loc.pathKind = optional_enum(j, "pathKind", parse_path_kind, PathKind::Main);
  return loc;
}

void encode_location(json& j, const Location& loc, bool withScope) {
  if (withScope) j["scope"] = to_string(loc.scope);
  j["path"] = loc.path;
  j["range"] = encode(loc.range);
  if (loc.pathKind != PathKind::Main) j["pathKind"] = to_string(loc.pathKind);
}

}  // namespace

SymbolId decode_symbol(const json& j, const ModuleId& module) {
  if (!j.is_string()) throw InputError("symbol must be a string");
  std::string v = j.get<std::string>();
  if (v.empty()) throw InputError("empty symbol");
  return is_local_symbol(v) ? SymbolId(std::move(v), module) : SymbolId(std::move(v));
}

json encode(const TypeRef& t) { return json{{"head", t.head.value}, {"args", encode(t.args)}}; }

TypeRef decode_type_ref(const json& j, const ModuleId& module) {
  TypeRef t;
  t.head = decode_symbol(field(j, "head"), module);
  if (j.contains("args")) t.args = decode_type_refs(j["args"], module);
  return t;
}

json encode(const ArgumentTree& a) {
  if (!a.isCall()) return json{{"ref", a.decl.value}};
  json args = json::array();
  for (const auto& c : a.args) args.push_back(encode(c));
  return json{{"call", a.decl.value}, {"typeArgs", encode(a.typeArgs)}, {"args", std::move(args)}};
}

ArgumentTree decode_argument(const json& j, const ModuleId& module) {
  if (!j.is_object()) throw InputError("argument tree must be an object");
  if (j.contains("ref")) return ArgumentTree::value(decode_symbol(j["ref"], module));
  if (!j.contains("call")) throw InputError("argument tree needs 'ref' or 'call'");
  std::vector<TypeRef> targs;
  if (j.contains("typeArgs")) targs = decode_type_refs(j["typeArgs"], module);
  std::vector<ArgumentTree> args;
  if (j.contains("args")) {
    for (const auto& c : array_field(j, "args")) args.push_back(decode_argument(c, module));
  }
  return ArgumentTree::call(decode_symbol(j["call"], module), std::move(targs), std::move(args));
}

json encode(const Range& r) { return json::array({r.startLine, r.startCol, r.endLine, r.endCol}); }

Range decode_range(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InputError("range must be [l1,c1,l2,c2]");
  for (const auto& e : j)
    if (!e.is_number_integer()) throw InputError("range entries must be integers");
  Range r{j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
  if (!r.valid()) throw InputError("range start after end");
  return r;
}

json encode(const ParamList& p) {
  json params = json::array();
  for (const auto& param : p.params) params.push_back(json{{"name", param.name}, {"type", encode(param.type)}});
  return json{{"implicit", p.isImplicit}, {"params", std::move(params)}};
}

ParamList decode_param_list(const json& j, const ModuleId& module) {
  ParamList p;
  p.isImplicit = optional_bool(j, "implicit", false);
  for (const auto& e : array_field(j, "params"))
    p.params.push_back(Param{string_field(e, "name"), decode_type_ref(field(e, "type"), module)});
  return p;
}

json encode_signature(const Declaration& d) {
  if (const MethodSig* m = d.method()) {
    json lists = json::array();
    for (const auto& l : m->paramLists) lists.push_back(encode(l));
    return json{{"typeParams", encode(m->typeParams)}, {"paramLists", std::move(lists)}, {"ret", encode(m->ret)}};
  }
  if (const ValueSig* v = d.value()) return json{{"type", encode(v->type)}};
  const TypeSig& t = std::get<TypeSig>(d.signature);
  json out{{"typeParams", encode(t.typeParams)}, {"parents", encode(t.parents)}};
  if (t.ctor) {
    json lists = json::array();
    for (const auto& l : *t.ctor) lists.push_back(encode(l));
    out["ctor"] = std::move(lists);
  }
  return out;
}

Signature decode_signature(const json& j, DeclKind kind, const ModuleId& module) {
  if (!j.is_object()) throw InputError("signature must be an object");
  auto tparams = [&] { return j.contains("typeParams") ? decode_symbols(j["typeParams"], module) : std::vector<SymbolId>{}; };
  switch (kind) {
    case DeclKind::Def:
    case DeclKind::Macro: {
      MethodSig m;
      m.typeParams = tparams();
      if (j.contains("paramLists"))
        for (const auto& l : array_field(j, "paramLists")) m.paramLists.push_back(decode_param_list(l, module));
      m.ret = decode_type_ref(field(j, "ret"), module);
      return m;
    }
    case DeclKind::Val:
    case DeclKind::Var:
    case DeclKind::Object:
    case DeclKind::Parameter:
      return ValueSig{decode_type_ref(field(j, "type"), module)};
    default: {
      TypeSig t;
      t.typeParams = tparams();
      if (j.contains("parents")) t.parents = decode_type_refs(j["parents"], module);
      if (j.contains("ctor")) {
        std::vector<ParamList> lists;
        for (const auto& l : array_field(j, "ctor")) lists.push_back(decode_param_list(l, module));
        t.ctor = std::move(lists);
      }
      return t;
    }
  }
}

json encode(const Declaration& d) {
  json j{{"kind", "declaration"},
         {"id", d.id.value},
         {"module", d.module},
         {"declKind", to_string(d.kind)},
         {"language", to_string(d.language)},
         {"implicit", d.isImplicit},
         {"visibility", to_string(d.visibility)}};
  encode_location(j, d.location, true);
  j["fromImplicitClass"] = d.fromImplicitClass;
  j["signature"] = encode_signature(d);
  return j;
}

Declaration decode_declaration(const json& j) {
  Declaration d;
  d.module = string_field(j, "module");
  d.id = decode_symbol(field(j, "id"), d.module);
  d.kind = enum_field(j, "declKind", parse_decl_kind);
  d.language = optional_enum(j, "language", parse_language, Language::Scala);
  d.isImplicit = bool_field(j, "implicit");
  d.visibility = optional_enum(j, "visibility", parse_visibility, Visibility::Public);
  d.location = decode_location(j, true);
  d.fromImplicitClass = optional_bool(j, "fromImplicitClass", false);
  d.signature = decode_signature(field(j, "signature"), d.kind, d.module);
  validate(d);
  return d;
}

json encode(const CallSite& c) {
  json args = json::array();
  for (const auto& a : c.implicitArgs) args.push_back(encode(a));
  json j{{"kind", "callsite"}, {"module", c.module}, {"callee", c.callee.value}};
  encode_location(j, c.location, false);
  j["typeArgs"] = encode(c.typeArgs);
  j["implicitArgs"] = std::move(args);
  j["syntheticCall"] = c.wholeCallSynthetic;
  return j;
}

CallSite decode_callsite(const json& j) {
  CallSite c;
  c.module = string_field(j, "module");
  c.callee = decode_symbol(field(j, "callee"), c.module);
  c.location = decode_location(j, false);
  if (j.contains("typeArgs")) c.typeArgs = decode_type_refs(j["typeArgs"], c.module);
  if (j.contains("implicitArgs"))
    for (const auto& a : array_field(j, "implicitArgs")) c.implicitArgs.push_back(decode_argument(a, c.module));
  c.wholeCallSynthetic = optional_bool(j, "syntheticCall", false);
  return c;
}

json encode(const ProjectMeta& p) {
  return json{{"kind", "project"},       {"id", p.id},
              {"stars", p.stars},        {"commits", p.commits},
              {"firstCommit", p.firstCommit}, {"lastCommit", p.lastCommit},
              {"dupRatio", p.dupRatio},  {"inIndex", p.inIndex}};
}

ProjectMeta decode_project(const json& j) {
  ProjectMeta p;
  p.id = string_field(j, "id");
  if (p.id.empty()) throw InputError("empty project id");
  p.stars = int_field(j, "stars");
  p.commits = int_field(j, "commits");
  p.firstCommit = string_field(j, "firstCommit");
  p.lastCommit = string_field(j, "lastCommit");
  p.dupRatio = number_field(j, "dupRatio");
  p.inIndex = bool_field(j, "inIndex");
  return p;
}

json encode(const ModuleMeta& m) {
  json j{{"kind", "module"},
         {"id", m.id},
         {"project", m.project},
         {"group", m.group},
         {"artifact", m.artifact},
         {"version", m.version},
         {"platform", to_string(m.platform)},
         {"scalaVersion", m.scalaVersion},
         {"locMain", m.locMain},
         {"locTest", m.locTest},
         {"totalCallSites", m.totalCallSites}};
  if (m.testCallSites) j["testCallSites"] = m.testCallSites;
  return j;
}

ModuleMeta decode_module(const json& j) {
  ModuleMeta m;
  m.id = string_field(j, "id");
  if (m.id.empty()) throw InputError("empty module id");
  m.project = string_field(j, "project");
  m.group = string_field(j, "group");
  m.artifact = string_field(j, "artifact");
  m.version = string_field(j, "version");
  m.platform = enum_field(j, "platform", parse_platform);
  m.scalaVersion = string_field(j, "scalaVersion");
  m.locMain = int_field(j, "locMain");
  m.locTest = int_field(j, "locTest");
  m.totalCallSites = int_field(j, "totalCallSites");
  m.testCallSites = j.contains("testCallSites") ? int_field(j, "testCallSites") : 0;
  if (m.locMain < 0 || m.locTest < 0 || m.totalCallSites < 0 || m.testCallSites < 0 ||
      m.testCallSites > m.totalCallSites)
    throw InputError("module " + m.id + ": negative or inconsistent counts");
  return m;
}

}  // namespace implicitus::codec
