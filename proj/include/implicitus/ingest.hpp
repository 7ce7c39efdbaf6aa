#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "implicitus/model.hpp"

namespace implicitus {

/// Compiler-injected tree as recorded by the fact producer.
///
///   original   quote of source code at `range` (`symbol` optionally names the
///              symbol occurring there)
///   idref      reference to `symbol`
///   select     children = {qualifier, idref}
///   typeapply  children = {fn}, with `typeArgs`
///   apply      children = {fn, args...}
struct SyntheticTree {
  enum class Tag { Original, Id, Select, TypeApply, Apply };

  Tag tag = Tag::Original;
  Range range;
  std::optional<SymbolId> symbol;
  std::vector<TypeRef> typeArgs;
  std::vector<SyntheticTree> children;

  static SyntheticTree original(Range r, std::optional<SymbolId> sym = std::nullopt);
  static SyntheticTree id(SymbolId sym);
  static SyntheticTree select(SyntheticTree qual, SymbolId member);
  static SyntheticTree type_apply(SyntheticTree fn, std::vector<TypeRef> targs);
  static SyntheticTree apply(SyntheticTree fn, std::vector<SyntheticTree> args);

  const SyntheticTree& fn() const { return children.front(); }
  std::span<const SyntheticTree> args() const { return std::span(children).subspan(1); }

  bool operator==(const SyntheticTree&) const = default;
};

struct SyntheticRecord {
  ModuleId module;
  std::string path;
  PathKind pathKind = PathKind::Main;
  SyntheticTree tree;

  bool operator==(const SyntheticRecord&) const = default;
};

struct FactCounts {
  size_t projects = 0;
  size_t modules = 0;
  size_t declarations = 0;
  size_t callsites = 0;
  size_t synthetics = 0;

  bool operator==(const FactCounts&) const = default;
};

/// Records of one facts file, in input order per kind.
struct ParsedFacts {
  std::vector<ProjectMeta> projects;
  std::vector<ModuleMeta> modules;
  std::vector<Declaration> declarations;
  std::vector<CallSite> callsites;
  std::vector<SyntheticRecord> synthetics;

  FactCounts counts() const {
    return {projects.size(), modules.size(), declarations.size(), callsites.size(), synthetics.size()};
  }
  bool operator==(const ParsedFacts&) const = default;
};

/// Parses newline-delimited JSON fact records. Blank lines are skipped.
/// Throws InputError naming the 1-based line for malformed JSON, unknown
/// kinds, schema violations and duplicate declaration ids within a module.
ParsedFacts parse_facts(std::istream& in, const std::string& source = {});
ParsedFacts parse_facts_string(const std::string& text);

/// Inverse of parse_facts: one record per line, grouped by kind.
void serialize_facts(const ParsedFacts& facts, std::ostream& out);

/// Rewrites a pre-desugared implicit class into the class (no longer
/// implicit) and its conversion def "Name()." taking the single explicit
/// constructor parameter, the constructor's implicit list, and returning the
/// class type applied to its own type parameters.
std::pair<Declaration, Declaration> desugar_implicit_class(const Declaration& classDecl);

/// Linked corpus: metadata, the symbol table and every implicit call site.
struct Corpus {
  std::vector<ProjectMeta> projects;  // sorted by id
  std::vector<ModuleMeta> modules;    // sorted by id
  SymbolTable table;
  std::vector<CallSite> callsites;  // canonical order (callsite_less)
  std::map<ModuleId, std::set<SymbolId>> unresolved;  // flagged modules

  const ProjectMeta* project(const std::string& id) const;
  const ModuleMeta* module(const ModuleId& id) const;
  /// Project owning a module, or "" for dependency modules.
  std::string projectOf(const ModuleId& id) const;

  bool operator==(const Corpus&) const = default;
};

/// Merges fragments into a corpus: desugars implicit classes, resolves every
/// referenced symbol to a declaration or an external, and orders everything
/// canonically so that fragment order does not matter. Synthetic trees are
/// only used for symbol collection here; see `assemble_corpus`.
///
/// An id declared in several modules resolves to the copy from a module that
/// survives cross-build dedup, then to the smallest module id.
///
/// Throws InconsistencyError when the same id is declared with different
/// signatures in two modules of one project (or twice in one module).
Corpus link_symbols(const std::vector<ParsedFacts>& fragments);

/// Recomputes `corpus.unresolved`: modules whose call sites reference a
/// callee or injected declaration that is not declared anywhere.
void flag_unresolved(Corpus& corpus);

}  // namespace implicitus
