#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "implicitus/symbol.hpp"

namespace implicitus {

/// Reference to a type declaration or a type parameter, with ordered type
/// arguments. A reference with no arguments against a parameterized head is
/// a raw reference.
struct TypeRef {
  SymbolId head;
  std::vector<TypeRef> args;

  bool operator==(const TypeRef&) const = default;
  // Spelled out: a defaulted comparison over vector<TypeRef> recurses into
  // its own constraint check on some compilers.
  std::strong_ordering operator<=>(const TypeRef& other) const;
};

/// Shorthand used all over the fixtures and tests.
TypeRef ref(std::string head, std::vector<TypeRef> args = {});

/// Scala-like rendering, "Map[String,Int]", using simple names.
std::string to_display(const TypeRef& t);

enum class Scope { TopLevel, Nested, BlockLocal };
enum class PathKind { Main, Test, Generated };

struct Range {
  int startLine = 0;
  int startCol = 0;
  int endLine = 0;
  int endCol = 0;

  bool operator==(const Range&) const = default;
  std::strong_ordering operator<=>(const Range&) const = default;

  bool valid() const { return std::pair(startLine, startCol) <= std::pair(endLine, endCol); }
  bool contains(const Range& other) const {
    return std::pair(startLine, startCol) <= std::pair(other.startLine, other.startCol) &&
           std::pair(other.endLine, other.endCol) <= std::pair(endLine, endCol);
  }
};

struct Location {
  std::string path;
  std::string unit;  // compilation unit; the source file
  Range range;
  Scope scope = Scope::TopLevel;
  PathKind pathKind = PathKind::Main;

  bool operator==(const Location&) const = default;
};

enum class DeclKind { Def, Val, Var, Object, Class, Trait, Interface, Type, TypeParam, Parameter, Macro };
enum class Language { Scala, Java };
enum class Visibility { Public, Private, Protected };

struct Param {
  std::string name;
  TypeRef type;
  bool operator==(const Param&) const = default;
};

struct ParamList {
  bool isImplicit = false;
  std::vector<Param> params;
  bool operator==(const ParamList&) const = default;
};

struct MethodSig {
  std::vector<SymbolId> typeParams;
  std::vector<ParamList> paramLists;
  TypeRef ret;
  bool operator==(const MethodSig&) const = default;
};

struct ValueSig {
  TypeRef type;
  bool operator==(const ValueSig&) const = default;
};

/// Signature of classes, traits, interfaces, type aliases and type
/// parameters (whose parents are their upper bounds). `ctor` carries the
/// primary constructor of classes when the producer emits it; implicit
/// classes need it for desugaring.
struct TypeSig {
  std::vector<SymbolId> typeParams;
  std::vector<TypeRef> parents;
  std::optional<std::vector<ParamList>> ctor;
  bool operator==(const TypeSig&) const = default;
};

using Signature = std::variant<MethodSig, ValueSig, TypeSig>;

struct Declaration {
  SymbolId id;
  ModuleId module;
  DeclKind kind = DeclKind::Def;
  Language language = Language::Scala;
  bool isImplicit = false;
  Visibility visibility = Visibility::Public;
  Location location;
  Signature signature;
  bool fromImplicitClass = false;

  bool operator==(const Declaration&) const = default;

  const MethodSig* method() const { return std::get_if<MethodSig>(&signature); }
  const ValueSig* value() const { return std::get_if<ValueSig>(&signature); }
  const TypeSig* type() const { return std::get_if<TypeSig>(&signature); }

  /// The trailing implicit parameter list, if any.
  const ParamList* implicitParams() const;
};

/// Throws InputError when kind, signature and language disagree or when an
/// implicit parameter list is not last.
void validate(const Declaration& decl);

/// Compiler-injected argument: a value reference or a nested call.
struct ArgumentTree {
  enum class Kind { Value, Call };

  Kind kind = Kind::Value;
  SymbolId decl;
  std::vector<TypeRef> typeArgs;
  std::vector<ArgumentTree> args;

  static ArgumentTree value(SymbolId decl) { return {Kind::Value, std::move(decl), {}, {}}; }
  static ArgumentTree call(SymbolId decl, std::vector<TypeRef> typeArgs, std::vector<ArgumentTree> args) {
    return {Kind::Call, std::move(decl), std::move(typeArgs), std::move(args)};
  }

  bool isCall() const { return kind == Kind::Call; }
  bool operator==(const ArgumentTree&) const = default;
};

struct CallSite {
  SymbolId callee;
  ModuleId module;
  Location location;
  std::vector<TypeRef> typeArgs;
  std::vector<ArgumentTree> implicitArgs;
  bool wholeCallSynthetic = false;

  bool operator==(const CallSite&) const = default;

  /// A call site that involves implicit resolution at all.
  bool isImplicit() const { return wholeCallSynthetic || !implicitArgs.empty(); }
};

/// Canonical total order on call sites: module, path, range, callee, then
/// the remaining content.
bool callsite_less(const CallSite& a, const CallSite& b);

enum class Platform { JVM, JS, Native };

struct ProjectMeta {
  std::string id;
  long stars = 0;
  long commits = 0;
  std::string firstCommit;  // YYYY-MM-DD
  std::string lastCommit;
  double dupRatio = 0.0;
  bool inIndex = false;

  bool operator==(const ProjectMeta&) const = default;
};

struct ModuleMeta {
  ModuleId id;
  std::string project;
  std::string group;
  std::string artifact;
  std::string version;
  Platform platform = Platform::JVM;
  std::string scalaVersion;
  long locMain = 0;
  long locTest = 0;
  long totalCallSites = 0;
  long testCallSites = 0;  // share of totalCallSites located in test paths

  bool operator==(const ModuleMeta&) const = default;
};

/// Linked symbol table: every declaration by id, plus the ids that are only
/// referenced.
class SymbolTable {
 public:
  const Declaration* find(const SymbolId& id) const;
  bool isExternal(const SymbolId& id) const { return externals_.contains(id); }
  bool knows(const SymbolId& id) const { return decls_.contains(id) || externals_.contains(id); }

  /// Inserts or replaces a declaration; an id leaves the external set once
  /// declared.
  void put(Declaration decl);
  void addExternal(const SymbolId& id);

  const std::map<SymbolId, Declaration>& declarations() const { return decls_; }
  const std::set<SymbolId>& externals() const { return externals_; }
  size_t size() const { return decls_.size(); }

  bool operator==(const SymbolTable&) const = default;

 private:
  std::map<SymbolId, Declaration> decls_;
  std::set<SymbolId> externals_;
};

// ---------------------------------------------------------------------------
// Type conformance
// ---------------------------------------------------------------------------

using Bindings = std::map<SymbolId, TypeRef>;

/// Replaces bound type-parameter heads recursively. A bound head applied to
/// arguments (higher-kinded use) keeps those arguments when the binding is
/// raw.
TypeRef substitute(const TypeRef& t, const Bindings& bindings);

/// Walks the parent chain of `t` and returns the instantiation of `target`
/// reached first (depth-first, parents in declaration order). Unbound
/// parameters of raw references stay as type-parameter heads.
///
/// Throws InconsistencyError on a cycle in the parent chain.
std::optional<TypeRef> find_supertype(const TypeRef& t, const SymbolId& target, const SymbolTable& table);

bool conforms_to(const TypeRef& t, const SymbolId& target, const SymbolTable& table);

struct FunctionShape {
  TypeRef source;
  TypeRef target;
  bool operator==(const FunctionShape&) const = default;
};

/// (source, target) of the one-argument function type `t` conforms to, if
/// any.
std::optional<FunctionShape> conversion_shape(const TypeRef& t, const SymbolTable& table,
                                              const SymbolId& functionId);

/// Collects every symbol mentioned by a type reference.
void collect_symbols(const TypeRef& t, std::vector<SymbolId>& out);

// ---------------------------------------------------------------------------
// Enum names as they appear in facts and reports
// ---------------------------------------------------------------------------

std::string_view to_string(DeclKind k);
std::string_view to_string(Language l);
std::string_view to_string(Visibility v);
std::string_view to_string(Scope s);
std::string_view to_string(PathKind p);
std::string_view to_string(Platform p);

std::optional<DeclKind> parse_decl_kind(std::string_view s);
std::optional<Language> parse_language(std::string_view s);
std::optional<Visibility> parse_visibility(std::string_view s);
std::optional<Scope> parse_scope(std::string_view s);
std::optional<PathKind> parse_path_kind(std::string_view s);
std::optional<Platform> parse_platform(std::string_view s);

}  // namespace implicitus
