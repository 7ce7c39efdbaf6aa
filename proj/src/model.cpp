#include "implicitus/model.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <unordered_set>

#include "implicitus/errors.hpp"

namespace implicitus {

std::strong_ordering TypeRef::operator<=>(const TypeRef& other) const {
  if (auto c = head <=> other.head; c != 0) return c;
  return std::lexicographical_compare_three_way(args.begin(), args.end(), other.args.begin(), other.args.end());
}

TypeRef ref(std::string head, std::vector<TypeRef> args) {
  return TypeRef{SymbolId(std::move(head)), std::move(args)};
}

std::string to_display(const TypeRef& t) {
  std::string out = simple_name(t.head.value);
  if (!t.args.empty()) {
    out += '[';
    for (size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ',';
      out += to_display(t.args[i]);
    }
    out += ']';
  }
  return out;
}

const ParamList* Declaration::implicitParams() const {
  const MethodSig* m = method();
  const std::vector<ParamList>* lists = nullptr;
  if (m) {
    lists = &m->paramLists;
  } else if (const TypeSig* t = type(); t && t->ctor) {
    lists = &*t->ctor;
  }
  if (!lists || lists->empty() || !lists->back().isImplicit) return nullptr;
  return &lists->back();
}

void validate(const Declaration& d) {
  auto fail = [&](std::string_view what) {
    throw InputError("declaration " + d.id.value + ": " + std::string(what));
  };
  if (d.id.empty()) fail("empty id");
  switch (d.kind) {
    case DeclKind::Def:
    case DeclKind::Macro:
      if (!d.method()) fail("DEF/MACRO requires a method signature");
      break;
    case DeclKind::Val:
    case DeclKind::Var:
    case DeclKind::Object:
    case DeclKind::Parameter:
      if (!d.value()) fail("VAL/VAR/OBJECT/PARAMETER requires a value signature");
      break;
    case DeclKind::Class:
    case DeclKind::Trait:
    case DeclKind::Interface:
    case DeclKind::Type:
    case DeclKind::TypeParam:
      if (!d.type()) fail("type declarations require a type signature");
      break;
  }
  if (d.kind == DeclKind::Interface && d.language != Language::Java) fail("INTERFACE must be JAVA");
  if (d.kind == DeclKind::Trait && d.language != Language::Scala) fail("TRAIT must be SCALA");
  if (!d.location.range.valid()) fail("range start after end");

  auto check_lists = [&](const std::vector<ParamList>& lists) {
    for (size_t i = 0; i < lists.size(); ++i)
      if (lists[i].isImplicit && i + 1 != lists.size()) fail("implicit parameter list must be last");
  };
  if (auto* m = d.method()) check_lists(m->paramLists);
  if (auto* t = d.type(); t && t->ctor) check_lists(*t->ctor);
}

namespace {

auto callsite_key(const CallSite& c) {
  return std::tie(c.module, c.location.path, c.location.range, c.callee, c.wholeCallSynthetic);
}

bool args_less(const std::vector<ArgumentTree>& a, const std::vector<ArgumentTree>& b);

bool arg_less(const ArgumentTree& a, const ArgumentTree& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.decl != b.decl) return a.decl < b.decl;
  if (a.typeArgs != b.typeArgs) return a.typeArgs < b.typeArgs;
  return args_less(a.args, b.args);
}

bool args_less(const std::vector<ArgumentTree>& a, const std::vector<ArgumentTree>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), arg_less);
}

}  // namespace

bool callsite_less(const CallSite& a, const CallSite& b) {
  if (callsite_key(a) != callsite_key(b)) return callsite_key(a) < callsite_key(b);
  if (a.typeArgs != b.typeArgs) return a.typeArgs < b.typeArgs;
  if (a.implicitArgs != b.implicitArgs) return args_less(a.implicitArgs, b.implicitArgs);
  return std::tie(a.location.scope, a.location.pathKind) < std::tie(b.location.scope, b.location.pathKind);
}

const Declaration* SymbolTable::find(const SymbolId& id) const {
  auto it = decls_.find(id);
  return it == decls_.end() ? nullptr : &it->second;
}

void SymbolTable::put(Declaration decl) {
  externals_.erase(decl.id);
  SymbolId key = decl.id;
  decls_.insert_or_assign(std::move(key), std::move(decl));
}

void SymbolTable::addExternal(const SymbolId& id) {
  if (!decls_.contains(id)) externals_.insert(id);
}

// ---------------------------------------------------------------------------

TypeRef substitute(const TypeRef& t, const Bindings& bindings) {
  if (auto it = bindings.find(t.head); it != bindings.end()) {
    TypeRef out = it->second;
    if (out.args.empty() && !t.args.empty()) {
      out.args.reserve(t.args.size());
      for (const auto& a : t.args) out.args.push_back(substitute(a, bindings));
    }
    return out;
  }
  TypeRef out{t.head, {}};
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(substitute(a, bindings));
  return out;
}

namespace {

// Parents of the type named by `head`, instantiated with `args`. Objects are
// their own singleton types whose only parent is the declared value type.
std::optional<std::vector<TypeRef>> parents_of(const Declaration& d, const std::vector<TypeRef>& args) {
  if (const TypeSig* sig = d.type()) {
    Bindings b;
    if (args.size() == sig->typeParams.size())
      for (size_t i = 0; i < args.size(); ++i) b.emplace(sig->typeParams[i], args[i]);
    std::vector<TypeRef> out;
    out.reserve(sig->parents.size());
    for (const auto& p : sig->parents) out.push_back(b.empty() ? p : substitute(p, b));
    return out;
  }
  if (d.kind == DeclKind::Object)
    if (const ValueSig* v = d.value()) return std::vector<TypeRef>{v->type};
  return std::nullopt;
}

struct SupertypeSearch {
  const SymbolId& target;
  const SymbolTable& table;
  std::vector<SymbolId> stack;
  std::unordered_set<SymbolId> exhausted;  // heads known not to reach target

  std::optional<TypeRef> walk(const TypeRef& t) {
    if (t.head == target) return t;
    if (exhausted.contains(t.head)) return std::nullopt;
    const Declaration* d = table.find(t.head);
    if (!d) return std::nullopt;
    auto parents = parents_of(*d, t.args);
    if (!parents) return std::nullopt;
    if (std::find(stack.begin(), stack.end(), t.head) != stack.end())
      throw InconsistencyError("cycle in parent chain through " + t.head.value);
    stack.push_back(t.head);
    for (const auto& p : *parents) {
      if (auto found = walk(p)) {
        stack.pop_back();
        return found;
      }
    }
    stack.pop_back();
    exhausted.insert(t.head);
    return std::nullopt;
  }
};

}  // namespace

std::optional<TypeRef> find_supertype(const TypeRef& t, const SymbolId& target, const SymbolTable& table) {
  SupertypeSearch search{target, table, {}, {}};
  return search.walk(t);
}

bool conforms_to(const TypeRef& t, const SymbolId& target, const SymbolTable& table) {
  return find_supertype(t, target, table).has_value();
}

std::optional<FunctionShape> conversion_shape(const TypeRef& t, const SymbolTable& table,
                                              const SymbolId& functionId) {
  auto fn = find_supertype(t, functionId, table);
  if (!fn || fn->args.size() != 2) return std::nullopt;
  return FunctionShape{fn->args[0], fn->args[1]};
}

void collect_symbols(const TypeRef& t, std::vector<SymbolId>& out) {
  out.push_back(t.head);
  for (const auto& a : t.args) collect_symbols(a, out);
}

// ---------------------------------------------------------------------------

namespace {

template <typename E, size_t N>
using Names = std::array<std::pair<E, std::string_view>, N>;

constexpr Names<DeclKind, 11> kDeclKinds{{{DeclKind::Def, "DEF"},
                                          {DeclKind::Val, "VAL"},
                                          {DeclKind::Var, "VAR"},
                                          {DeclKind::Object, "OBJECT"},
                                          {DeclKind::Class, "CLASS"},
                                          {DeclKind::Trait, "TRAIT"},
                                          {DeclKind::Interface, "INTERFACE"},
                                          {DeclKind::Type, "TYPE"},
                                          {DeclKind::TypeParam, "TYPE_PARAM"},
                                          {DeclKind::Parameter, "PARAMETER"},
                                          {DeclKind::Macro, "MACRO"}}};
constexpr Names<Language, 2> kLanguages{{{Language::Scala, "SCALA"}, {Language::Java, "JAVA"}}};
constexpr Names<Visibility, 3> kVisibilities{
    {{Visibility::Public, "PUBLIC"}, {Visibility::Private, "PRIVATE"}, {Visibility::Protected, "PROTECTED"}}};
constexpr Names<Scope, 3> kScopes{
    {{Scope::TopLevel, "TOP_LEVEL"}, {Scope::Nested, "NESTED"}, {Scope::BlockLocal, "BLOCK_LOCAL"}}};
constexpr Names<PathKind, 3> kPathKinds{
    {{PathKind::Main, "MAIN"}, {PathKind::Test, "TEST"}, {PathKind::Generated, "GENERATED"}}};
constexpr Names<Platform, 3> kPlatforms{
    {{Platform::JVM, "JVM"}, {Platform::JS, "JS"}, {Platform::Native, "NATIVE"}}};

template <typename E, size_t N>
std::string_view name_of(const Names<E, N>& names, E e) {
  for (const auto& [v, n] : names)
    if (v == e) return n;
  return "?";
}

template <typename E, size_t N>
std::optional<E> value_of(const Names<E, N>& names, std::string_view s) {
  for (const auto& [v, n] : names)
    if (n == s) return v;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(DeclKind k) { return name_of(kDeclKinds, k); }
std::string_view to_string(Language l) { return name_of(kLanguages, l); }
std::string_view to_string(Visibility v) { return name_of(kVisibilities, v); }
std::string_view to_string(Scope s) { return name_of(kScopes, s); }
std::string_view to_string(PathKind p) { return name_of(kPathKinds, p); }
std::string_view to_string(Platform p) { return name_of(kPlatforms, p); }

std::optional<DeclKind> parse_decl_kind(std::string_view s) { return value_of(kDeclKinds, s); }
std::optional<Language> parse_language(std::string_view s) { return value_of(kLanguages, s); }
std::optional<Visibility> parse_visibility(std::string_view s) { return value_of(kVisibilities, s); }
std::optional<Scope> parse_scope(std::string_view s) { return value_of(kScopes, s); }
std::optional<PathKind> parse_path_kind(std::string_view s) { return value_of(kPathKinds, s); }
std::optional<Platform> parse_platform(std::string_view s) { return value_of(kPlatforms, s); }

}  // namespace implicitus
