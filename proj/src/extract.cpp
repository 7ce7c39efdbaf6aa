#include "implicitus/extract.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "implicitus/errors.hpp"

namespace implicitus {

std::vector<Declaration> extract_implicit_declarations(const ModuleId& module, const SymbolTable& table) {
  std::vector<Declaration> out;
  for (const auto& [id, d] : table.declarations())
    if (d.module == module && d.isImplicit) out.push_back(d);
  std::sort(out.begin(), out.end(), [](const Declaration& a, const Declaration& b) {
    return std::tie(a.location.path, a.location.range, a.id) < std::tie(b.location.path, b.location.range, b.id);
  });
  return out;
}

namespace {

using Tag = SyntheticTree::Tag;

// What sits in function position of an application.
struct FunctionPart {
  bool overOriginal = false;      // rooted in source code
  Range originalRange;            // when overOriginal
  std::optional<SymbolId> callee;
  std::vector<TypeRef> typeArgs;
  std::optional<SymbolId> qualifier;  // injected value a member is selected from
};

std::optional<FunctionPart> function_part(const SyntheticTree& t) {
  switch (t.tag) {
    case Tag::Original: {
      FunctionPart f;
      f.overOriginal = true;
      f.originalRange = t.range;
      f.callee = t.symbol;
      return f;
    }
    case Tag::Id: {
      FunctionPart f;
      f.callee = t.symbol;
      return f;
    }
    case Tag::Select: {
      const SyntheticTree& qual = t.children[0];
      FunctionPart f;
      if (qual.tag == Tag::Original) {
        f.overOriginal = true;
        f.originalRange = qual.range;
      } else if (qual.tag == Tag::Id) {
        f.qualifier = qual.symbol;
      } else if (auto inner = function_part(qual)) {
        f.overOriginal = inner->overOriginal;
        f.originalRange = inner->originalRange;
      } else {
        return std::nullopt;
      }
      f.callee = t.children[1].symbol;
      return f;
    }
    case Tag::TypeApply: {
      auto f = function_part(t.fn());
      if (!f) return std::nullopt;
      f->typeArgs = t.typeArgs;
      return f;
    }
    case Tag::Apply:
      return std::nullopt;
  }
  return std::nullopt;
}

class UnitExtractor {
 public:
  UnitExtractor(const SymbolTable& table, const SyntheticRecord& first) : table_(table), unit_(first) {}

  void addFunctionSynthetic(const SyntheticTree& t) {
    auto f = function_part(t);
    if (f && f->overOriginal && f->callee) functions_.push_back(*f);
  }

  void check(const SyntheticTree& t) const {
    if (t.symbol && !table_.knows(*t.symbol))
      throw InconsistencyError("synthetic tree in " + unit_.path + " references unknown symbol " + t.symbol->value);
    for (const auto& c : t.children) check(c);
  }

  std::optional<CallSite> interpret(const SyntheticTree& t, PathKind pathKind) const {
    if (t.tag != Tag::Apply) return std::nullopt;
    auto site = application(t);
    if (!site || !site->isImplicit()) return std::nullopt;
    site->module = unit_.module;
    site->location.path = unit_.path;
    site->location.unit = unit_.path;
    site->location.pathKind = pathKind;
    return site;
  }

 private:
  std::optional<CallSite> application(const SyntheticTree& t) const {
    const SyntheticTree& fn = t.fn();
    auto args = t.args();
    bool hasOriginalArg = std::any_of(args.begin(), args.end(), [](const SyntheticTree& a) { return a.tag == Tag::Original; });

    if (fn.tag == Tag::Apply) {
      // Implicit arguments applied on top of an injected conversion.
      auto inner = application(fn);
      if (!inner || !inner->wholeCallSynthetic || hasOriginalArg || !inner->implicitArgs.empty()) return std::nullopt;
      inner->implicitArgs = injected(args);
      return inner;
    }

    auto f = function_part(fn);
    if (!f) return std::nullopt;

    if (f->overOriginal) {
      if (hasOriginalArg || args.empty()) return std::nullopt;
      CallSite cs;
      cs.location.range = f->originalRange;
      cs.typeArgs = f->typeArgs;
      if (f->callee) {
        cs.callee = *f->callee;
      } else if (auto resolved = resolve_function(f->originalRange)) {
        cs.callee = *resolved->callee;
        if (cs.typeArgs.empty()) cs.typeArgs = resolved->typeArgs;
      } else {
        throw InconsistencyError("cannot resolve the callee of the injected application at " + unit_.path + ":" +
                                 std::to_string(f->originalRange.startLine) + ":" +
                                 std::to_string(f->originalRange.startCol));
      }
      cs.implicitArgs = injected(args);
      return cs;
    }

    // Injected function applied to one piece of source code: a conversion.
    if (args.size() != 1 || args[0].tag != Tag::Original || !f->callee) return std::nullopt;
    CallSite cs;
    cs.wholeCallSynthetic = true;
    cs.location.range = args[0].range;
    cs.typeArgs = f->typeArgs;
    cs.callee = *f->callee;
    if (f->qualifier) {
      // `deck.apply(x)`: the conversion is the implicit function value.
      const Declaration* q = table_.find(*f->qualifier);
      if (q && q->isImplicit && (q->kind == DeclKind::Val || q->kind == DeclKind::Var || q->kind == DeclKind::Object))
        cs.callee = *f->qualifier;
    }
    return cs;
  }

  // The select/typeapply synthetic over the function part of the call at
  // `call`: same start, contained, widest.
  std::optional<FunctionPart> resolve_function(const Range& call) const {
    const FunctionPart* best = nullptr;
    for (const auto& f : functions_) {
      const Range& r = f.originalRange;
      if (r.startLine != call.startLine || r.startCol != call.startCol || !call.contains(r)) continue;
      if (!best || std::pair(r.endLine, r.endCol) > std::pair(best->originalRange.endLine, best->originalRange.endCol))
        best = &f;
    }
    if (!best) return std::nullopt;
    return *best;
  }

  std::vector<ArgumentTree> injected(std::span<const SyntheticTree> args) const {
    std::vector<ArgumentTree> out;
    for (const auto& a : args)
      if (auto arg = argument(a)) out.push_back(std::move(*arg));
    return out;
  }

  std::optional<ArgumentTree> argument(const SyntheticTree& t) const {
    switch (t.tag) {
      case Tag::Original:
        return std::nullopt;
      case Tag::Id:
        return ArgumentTree::value(*t.symbol);
      case Tag::Select:
        return ArgumentTree::value(*t.children[1].symbol);
      case Tag::TypeApply: {
        auto inner = argument(t.fn());
        if (!inner) return std::nullopt;
        return ArgumentTree::call(inner->decl, t.typeArgs, std::move(inner->args));
      }
      case Tag::Apply: {
        auto inner = argument(t.fn());
        if (!inner) return std::nullopt;
        ArgumentTree call = ArgumentTree::call(inner->decl, std::move(inner->typeArgs), std::move(inner->args));
        for (auto& a : injected(t.args())) call.args.push_back(std::move(a));
        return call;
      }
    }
    return std::nullopt;
  }

  const SymbolTable& table_;
  const SyntheticRecord& unit_;
  std::vector<FunctionPart> functions_;
};

}  // namespace

std::vector<CallSite> callsites_from_synthetics(std::span<const SyntheticRecord> records, const SymbolTable& table) {
  std::map<std::pair<ModuleId, std::string>, std::vector<const SyntheticRecord*>> units;
  for (const auto& r : records) units[{r.module, r.path}].push_back(&r);

  std::vector<CallSite> out;
  for (const auto& [key, unit] : units) {
    UnitExtractor ex(table, *unit.front());
    for (const auto* r : unit) {
      ex.check(r->tree);
      if (r->tree.tag != Tag::Apply) ex.addFunctionSynthetic(r->tree);
    }
    for (const auto* r : unit)
      if (auto cs = ex.interpret(r->tree, r->pathKind)) out.push_back(std::move(*cs));
  }
  std::sort(out.begin(), out.end(), callsite_less);
  return out;
}

Corpus assemble_corpus(const std::vector<ParsedFacts>& fragments) {
  Corpus corpus = link_symbols(fragments);
  std::vector<SyntheticRecord> synthetics;
  for (const auto& f : fragments) synthetics.insert(synthetics.end(), f.synthetics.begin(), f.synthetics.end());
  auto extracted = callsites_from_synthetics(synthetics, corpus.table);
  corpus.callsites.insert(corpus.callsites.end(), extracted.begin(), extracted.end());
  std::sort(corpus.callsites.begin(), corpus.callsites.end(), callsite_less);
  corpus.callsites.erase(std::unique(corpus.callsites.begin(), corpus.callsites.end()), corpus.callsites.end());
  flag_unresolved(corpus);
  return corpus;
}

}  // namespace implicitus
