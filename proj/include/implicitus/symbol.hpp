#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace implicitus {

using ModuleId = std::string;

/// Identifier of a program entity, e.g. "scala/concurrent/Future.apply()." or
/// "scala/collection/immutable/List#[A]".
///
/// Symbols local to a compilation unit ("local12") are only unique within
/// their module; for those `scope` holds the owning module so that linking
/// across modules never merges two unrelated locals.
struct SymbolId {
  std::string value;
  ModuleId scope;

  SymbolId() = default;
  explicit SymbolId(std::string v, ModuleId s = {})
      : value(std::move(v)), scope(std::move(s)) {}

  bool moduleScoped() const { return !scope.empty(); }
  bool empty() const { return value.empty(); }

  bool operator==(const SymbolId&) const = default;
  std::strong_ordering operator<=>(const SymbolId&) const = default;
};

/// True for symbols that name block-local entities and therefore need module
/// scoping ("local0", "local17", ...).
bool is_local_symbol(std::string_view value);

/// One descriptor of a symbol path.
struct Descriptor {
  enum class Kind { Package, Term, Type, Method, TypeParameter, Parameter, Bare };
  Kind kind;
  std::string name;  // unquoted name
  std::string text;  // exact source text including suffix
};

/// Splits a symbol into its descriptors. Never throws; unparseable tails end
/// up as a single Bare descriptor.
std::vector<Descriptor> parse_descriptors(std::string_view symbol);

/// Owner prefix of a symbol ("pkg/List#flatten()." -> "pkg/List#"), or ""
/// for top-level and local symbols.
std::string owner_of(std::string_view symbol);

/// Display name of a symbol ("pkg/Foo.bar()." -> "bar", "pkg/`=:=`#" -> "=:=").
std::string simple_name(std::string_view symbol);

}  // namespace implicitus

template <>
struct std::hash<implicitus::SymbolId> {
  size_t operator()(const implicitus::SymbolId& id) const noexcept {
    size_t h = std::hash<std::string>{}(id.value);
    return h ^ (std::hash<std::string>{}(id.scope) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
