#include "implicitus/classify.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace implicitus {

namespace {

template <typename E, size_t N>
std::optional<E> parse_enum(std::string_view s, const E (&values)[N]) {
  for (E v : values)
    if (to_string(v) == s) return v;
  return std::nullopt;
}

bool mentions_any(const TypeRef& t, std::span<const SymbolId> ids) {
  if (std::find(ids.begin(), ids.end(), t.head) != ids.end()) return true;
  return std::any_of(t.args.begin(), t.args.end(), [&](const TypeRef& a) { return mentions_any(a, ids); });
}

void add_type_params(const Declaration& d, std::vector<SymbolId>& out) {
  if (const auto* m = d.method()) out.insert(out.end(), m->typeParams.begin(), m->typeParams.end());
  if (const auto* t = d.type()) out.insert(out.end(), t->typeParams.begin(), t->typeParams.end());
}

// Compilation unit of a type's declaration; none for externals.
std::optional<std::pair<ModuleId, std::string>> unit_of(const SymbolId& head, const SymbolTable& table) {
  const Declaration* d = table.find(head);
  if (!d || d->location.unit.empty()) return std::nullopt;
  return std::pair(d->module, d->location.unit);
}

}  // namespace

std::string_view to_string(ConversionKind k) {
  switch (k) {
    case ConversionKind::LateTrait: return "LATE_TRAIT";
    case ConversionKind::ExtensionMethod: return "EXTENSION_METHOD";
    case ConversionKind::Plain: return "PLAIN";
  }
  return "?";
}

std::string_view to_string(CallSiteIdiom i) {
  switch (i) {
    case CallSiteIdiom::TypeClass: return "TYPE_CLASS";
    case CallSiteIdiom::TypeProof: return "TYPE_PROOF";
    case CallSiteIdiom::Context: return "CONTEXT";
  }
  return "?";
}

std::string_view to_string(Idiom i) {
  switch (i) {
    case Idiom::LateTrait: return "LATE_TRAIT";
    case Idiom::ExtensionMethod: return "EXTENSION_METHOD";
    case Idiom::TypeClass: return "TYPE_CLASS";
    case Idiom::ExtensionSyntax: return "EXTENSION_SYNTAX";
    case Idiom::TypeProof: return "TYPE_PROOF";
    case Idiom::Context: return "CONTEXT";
    case Idiom::UnrelatedConversion: return "UNRELATED_CONVERSION";
    case Idiom::BidirectionalConversion: return "BIDIRECTIONAL_CONVERSION";
  }
  return "?";
}

std::optional<ConversionKind> parse_conversion_kind(std::string_view s) {
  static constexpr ConversionKind all[] = {ConversionKind::LateTrait, ConversionKind::ExtensionMethod,
                                           ConversionKind::Plain};
  return parse_enum(s, all);
}

std::optional<CallSiteIdiom> parse_callsite_idiom(std::string_view s) {
  static constexpr CallSiteIdiom all[] = {CallSiteIdiom::TypeClass, CallSiteIdiom::TypeProof, CallSiteIdiom::Context};
  return parse_enum(s, all);
}

std::optional<Idiom> parse_idiom(std::string_view s) { return parse_enum(s, kAllIdioms); }

Idiom as_idiom(CallSiteIdiom i) {
  switch (i) {
    case CallSiteIdiom::TypeClass: return Idiom::TypeClass;
    case CallSiteIdiom::TypeProof: return Idiom::TypeProof;
    case CallSiteIdiom::Context: break;
  }
  return Idiom::Context;
}

std::optional<Idiom> as_idiom(ConversionKind k) {
  switch (k) {
    case ConversionKind::LateTrait: return Idiom::LateTrait;
    case ConversionKind::ExtensionMethod: return Idiom::ExtensionMethod;
    case ConversionKind::Plain: break;
  }
  return std::nullopt;
}

std::optional<Conversion> conversion_of(const Declaration& decl, const SymbolTable& table, const RulesConfig& config) {
  if (!decl.isImplicit) return std::nullopt;

  if (decl.kind == DeclKind::Def) {
    const MethodSig* m = decl.method();
    if (!m) return std::nullopt;
    const ParamList* explicitList = nullptr;
    const ParamList* implicitList = nullptr;
    for (const auto& pl : m->paramLists) {
      if (pl.isImplicit) {
        implicitList = &pl;
      } else if (explicitList) {
        return std::nullopt;  // curried: more than one explicit list
      } else {
        explicitList = &pl;
      }
    }
    if (!explicitList || explicitList->params.size() != 1 || m->ret.head == config.unitId) return std::nullopt;
    Conversion c;
    c.decl = decl.id;
    c.source = explicitList->params.front().type;
    c.target = m->ret;
    c.conditional = implicitList && !implicitList->params.empty();
    c.fromImplicitClass = decl.fromImplicitClass;
    return c;
  }

  if (decl.kind == DeclKind::Val || decl.kind == DeclKind::Var || decl.kind == DeclKind::Object) {
    const ValueSig* v = decl.value();
    if (!v) return std::nullopt;
    auto shape = conversion_shape(v->type, table, config.functionId);
    if (!shape || shape->target.head == config.unitId) return std::nullopt;
    Conversion c;
    c.decl = decl.id;
    c.source = shape->source;
    c.target = shape->target;
    c.viaFunctionValue = true;
    c.fromImplicitClass = decl.fromImplicitClass;
    return c;
  }
  return std::nullopt;
}

ConversionKind classify_conversion(const Conversion& conv, const SymbolTable& table) {
  const Declaration* target = table.find(conv.target.head);
  bool traitTarget = target && (target->kind == DeclKind::Trait || target->kind == DeclKind::Interface);
  if (traitTarget && !conv.fromImplicitClass) return ConversionKind::LateTrait;
  if (conv.fromImplicitClass) return ConversionKind::ExtensionMethod;

  // Collocated with its (non-trait) target type. Type parameters and
  // externals are not types one can collocate with.
  const Declaration* self = table.find(conv.decl);
  if (self && target && !traitTarget && target->kind != DeclKind::TypeParam && !target->location.path.empty() &&
      target->module == self->module && target->location.path == self->location.path)
    return ConversionKind::ExtensionMethod;
  return ConversionKind::Plain;
}

std::vector<SymbolId> enclosing_type_params(const Declaration& decl, const SymbolTable& table) {
  std::vector<SymbolId> out;
  add_type_params(decl, out);
  for (std::string owner = owner_of(decl.id.value); !owner.empty(); owner = owner_of(owner))
    if (const Declaration* o = table.find(SymbolId(owner))) add_type_params(*o, out);
  return out;
}

bool is_type_class_param(const TypeRef& paramType, std::span<const SymbolId> enclosing) {
  return std::any_of(paramType.args.begin(), paramType.args.end(),
                     [&](const TypeRef& a) { return mentions_any(a, enclosing); });
}

bool is_constraint_param(const TypeRef& paramType, std::span<const SymbolId> enclosing, const RulesConfig& config) {
  if (!config.constraintIds.contains(paramType.head)) return false;
  if (paramType.head != config.functionId) return true;
  return paramType.args.size() == 2 && mentions_any(paramType.args[0], enclosing) &&
         mentions_any(paramType.args[1], enclosing);
}

bool is_extension_syntax(const Conversion& conv, const Declaration& decl, const SymbolTable& table) {
  if (classify_conversion(conv, table) != ConversionKind::ExtensionMethod) return false;
  const ParamList* implicits = decl.implicitParams();
  if (!implicits) return false;
  auto enclosing = enclosing_type_params(decl, table);
  return std::any_of(implicits->params.begin(), implicits->params.end(),
                     [&](const Param& p) { return is_type_class_param(p.type, enclosing); });
}

bool is_type_proof(const Declaration& decl, const SymbolTable& table, const RulesConfig& config) {
  if (!decl.method()) return false;
  const ParamList* implicits = decl.implicitParams();
  if (!implicits) return false;
  auto enclosing = enclosing_type_params(decl, table);
  return std::any_of(implicits->params.begin(), implicits->params.end(),
                     [&](const Param& p) { return is_constraint_param(p.type, enclosing, config); });
}

CallSiteIdiom classify_callsite(const CallSite& cs, const SymbolTable& table, const RulesConfig& config) {
  const Declaration* callee = table.find(cs.callee);
  if (!callee) throw UnresolvedCallee("call site callee " + cs.callee.value + " has no declaration");

  const ParamList* implicits = callee->implicitParams();
  if (!implicits) return CallSiteIdiom::Context;
  auto enclosing = enclosing_type_params(*callee, table);
  size_t filled = std::min(implicits->params.size(), cs.implicitArgs.size());
  auto params = std::span(implicits->params).first(filled);

  if (is_type_proof(*callee, table, config) &&
      std::any_of(params.begin(), params.end(),
                  [&](const Param& p) { return is_constraint_param(p.type, enclosing, config); }))
    return CallSiteIdiom::TypeProof;
  if (std::any_of(params.begin(), params.end(), [&](const Param& p) { return is_type_class_param(p.type, enclosing); }))
    return CallSiteIdiom::TypeClass;
  return CallSiteIdiom::Context;
}

bool is_unrelated(const Conversion& conv, const Declaration& decl, const SymbolTable& table) {
  if (decl.visibility != Visibility::Public || decl.location.scope == Scope::BlockLocal) return false;
  auto own = std::pair(decl.module, decl.location.unit);
  auto source = unit_of(conv.source.head, table);
  auto target = unit_of(conv.target.head, table);
  return source != own && target != own;
}

std::vector<std::pair<SymbolId, SymbolId>> bidirectional_pairs(std::span<const Conversion> convs,
                                                                const ArtifactKeyFn& artifactOf) {
  using Key = std::tuple<std::pair<std::string, std::string>, SymbolId, SymbolId>;
  std::map<Key, std::vector<const Conversion*>> byDirection;
  std::vector<std::pair<const Conversion*, Key>> keyed;
  keyed.reserve(convs.size());
  for (const auto& c : convs) {
    Key k{artifactOf(c.decl), c.source.head, c.target.head};
    byDirection[k].push_back(&c);
    keyed.emplace_back(&c, std::move(k));
  }

  std::vector<std::pair<SymbolId, SymbolId>> out;
  for (const auto& [c, k] : keyed) {
    auto it = byDirection.find(Key{std::get<0>(k), std::get<2>(k), std::get<1>(k)});
    if (it == byDirection.end()) continue;
    for (const Conversion* other : it->second) {
      if (other->decl == c->decl) continue;
      out.push_back(std::minmax(c->decl, other->decl));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace implicitus
