#include "implicitus/labels.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "implicitus/codec.hpp"
#include "implicitus/coordinates.hpp"
#include "implicitus/errors.hpp"
#include "implicitus/parallel.hpp"

namespace implicitus {

using codec::json;

std::vector<ProjectDecision> decide_projects(const std::vector<ProjectMeta>& projects,
                                             const std::vector<ModuleMeta>& modules) {
  std::map<std::string, std::vector<ModuleMeta>> byProject;
  for (const auto& m : modules) byProject[m.project].push_back(m);

  std::vector<ProjectDecision> out;
  out.reserve(projects.size());
  for (const auto& p : projects) {
    ProjectDecision d;
    d.project = p.id;
    d.verdict = retain_project(p);
    if (auto it = byProject.find(p.id); it != byProject.end()) d.canonicalModules = canonical_modules(it->second);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.project < b.project; });
  return out;
}

namespace {

struct ModuleWork {
  ModuleId module;
  const ProjectMeta* project = nullptr;
  long projectLocMain = 0;
  std::vector<const Declaration*> declarations;
  std::vector<const CallSite*> callsites;

  std::vector<DeclarationLabel> declLabels;
  std::vector<CallSiteLabel> siteLabels;
  std::vector<CallSite> unresolved;
};

std::pair<std::string, std::string> artifact_key(const ModuleId& module, const Corpus& corpus) {
  if (auto a = artifact_of(module, corpus)) return {a->group, a->artifact};
  return {std::string(), module};  // unpublished module: its own artifact
}

void add_conversion_idioms(const ConversionLabel& c, std::set<Idiom>& idioms) {
  if (auto k = as_idiom(c.kind)) idioms.insert(*k);
  if (c.extensionSyntax) idioms.insert(Idiom::ExtensionSyntax);
  if (c.unrelated) idioms.insert(Idiom::UnrelatedConversion);
  if (!c.partners.empty()) idioms.insert(Idiom::BidirectionalConversion);
}

void collect_origins(const ArgumentTree& a, const ModuleId& at, const Corpus& corpus, const RulesConfig& config,
                     std::vector<Origin>& out) {
  out.push_back(origin(a.decl, at, corpus, config));
  for (const auto& c : a.args) collect_origins(c, at, corpus, config, out);
}

}  // namespace

LabeledCorpus label_corpus(Corpus corpus, const RulesConfig& config, const LabelOptions& options) {
  LabeledCorpus out;
  out.config = config;
  out.decisions = decide_projects(corpus.projects, corpus.modules);
  out.corpus = std::move(corpus);
  const Corpus& c = out.corpus;
  const SymbolTable& table = c.table;

  // Surviving modules, grouped with their project.
  std::map<ModuleId, ModuleWork> work;
  for (const auto& d : out.decisions) {
    if (!d.verdict.retained) continue;
    const ProjectMeta* p = c.project(d.project);
    ProjectProfile profile;
    profile.project = d.project;
    profile.stars = p->stars;
    for (const auto& m : d.canonicalModules) {
      const ModuleMeta* meta = c.module(m);
      profile.locMain += meta->locMain;
      profile.totalCallSites += meta->totalCallSites;
      profile.testCallSites += meta->testCallSites;
    }
    profile.mainCategory = project_category(*p, profile.locMain, PathKind::Main);
    for (const auto& m : d.canonicalModules) {
      ModuleWork& w = work[m];
      w.module = m;
      w.project = p;
      w.projectLocMain = profile.locMain;
    }
    out.projects.push_back(std::move(profile));
  }

  for (const auto& [module, symbols] : c.unresolved) {
    if (!work.contains(module)) continue;
    std::string msg = "module " + module + " references " + std::to_string(symbols.size()) +
                      " undeclared symbol(s), first " + symbols.begin()->value;
    if (options.strict) throw InconsistencyError(msg);
    out.warnings.push_back(std::move(msg));
  }

  for (const auto& [id, d] : table.declarations()) {
    auto it = work.find(d.module);
    if (it == work.end()) continue;
    const ParamList* implicits = d.implicitParams();
    if (d.isImplicit || (implicits && !implicits->params.empty())) it->second.declarations.push_back(&d);
  }
  for (const auto& cs : c.callsites)
    if (auto it = work.find(cs.module); it != work.end()) it->second.callsites.push_back(&cs);

  // Conversions anywhere in the table: partners may live in dependencies.
  std::vector<Conversion> conversions;
  for (const auto& [id, d] : table.declarations())
    if (auto conv = conversion_of(d, table, config)) conversions.push_back(std::move(*conv));
  std::map<SymbolId, std::vector<SymbolId>> partners;
  auto pairs = bidirectional_pairs(conversions, [&](const SymbolId& decl) {
    const Declaration* d = table.find(decl);
    return artifact_key(d ? d->module : ModuleId(), c);
  });
  for (const auto& [a, b] : pairs) {
    partners[a].push_back(b);
    partners[b].push_back(a);
  }
  std::map<SymbolId, ConversionLabel> conversionLabels;
  for (auto& conv : conversions) {
    const Declaration& d = *table.find(conv.decl);
    ConversionLabel l;
    l.kind = classify_conversion(conv, table);
    l.extensionSyntax = is_extension_syntax(conv, d, table);
    l.unrelated = is_unrelated(conv, d, table);
    if (auto it = partners.find(conv.decl); it != partners.end()) {
      l.partners = it->second;
      std::sort(l.partners.begin(), l.partners.end());
    }
    l.conversion = std::move(conv);
    conversionLabels.emplace(l.conversion.decl, std::move(l));
  }

  std::vector<ModuleWork*> units;
  for (auto& [_, w] : work) units.push_back(&w);

  parallel_for(units.size(), options.jobs, [&](size_t i) {
    ModuleWork& w = *units[i];
    for (const Declaration* d : w.declarations) {
      DeclarationLabel l;
      l.id = d->id;
      l.module = d->module;
      l.project = w.project->id;
      l.category = project_category(*w.project, w.projectLocMain, d->location.pathKind);
      if (const ParamList* implicits = d->implicitParams()) {
        auto enclosing = enclosing_type_params(*d, table);
        for (const auto& p : implicits->params) {
          ParameterLabel pl{p.name, p.type, is_type_class_param(p.type, enclosing),
                            is_constraint_param(p.type, enclosing, config)};
          if (pl.constraint && d->method())
            l.idioms.insert(Idiom::TypeProof);
          else if (pl.typeClass)
            l.idioms.insert(Idiom::TypeClass);
          else
            l.idioms.insert(Idiom::Context);
          l.implicitParams.push_back(std::move(pl));
        }
      }
      if (auto it = conversionLabels.find(d->id); it != conversionLabels.end()) {
        l.conversion = it->second;
        add_conversion_idioms(it->second, l.idioms);
      }
      w.declLabels.push_back(std::move(l));
    }

    for (const CallSite* cs : w.callsites) {
      CallSiteLabel l;
      try {
        l.idiom = classify_callsite(*cs, table, config);
      } catch (const UnresolvedCallee&) {
        w.unresolved.push_back(*cs);
        continue;
      }
      l.site = *cs;
      l.project = w.project->id;
      l.category = project_category(*w.project, w.projectLocMain, cs->location.pathKind);
      l.idioms.insert(as_idiom(l.idiom));
      if (cs->wholeCallSynthetic)
        if (auto it = conversionLabels.find(cs->callee); it != conversionLabels.end())
          add_conversion_idioms(it->second, l.idioms);
      l.injectedCount = injected_count(*cs);
      l.injectedText = injected_text(*cs);
      l.origin = origin(cs->callee, cs->module, c, config);
      for (const auto& a : cs->implicitArgs) collect_origins(a, cs->module, c, config, l.argumentOrigins);
      w.siteLabels.push_back(std::move(l));
    }
  });

  std::map<std::string, ProjectProfile*> profiles;
  for (auto& p : out.projects) profiles[p.project] = &p;
  for (ModuleWork* w : units) {
    for (auto& l : w->declLabels) out.declarations.push_back(std::move(l));
    for (auto& l : w->siteLabels) {
      ProjectProfile& p = *profiles.at(l.project);
      (l.site.location.pathKind == PathKind::Test ? p.implicitTest : p.implicitMain)++;
      out.callsites.push_back(std::move(l));
    }
    for (auto& s : w->unresolved) out.unresolvedCallSites.push_back(std::move(s));
  }
  std::sort(out.declarations.begin(), out.declarations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.project, a.module, a.id) < std::tie(b.project, b.module, b.id);
  });
  std::sort(out.callsites.begin(), out.callsites.end(),
            [](const auto& a, const auto& b) { return callsite_less(a.site, b.site); });
  std::sort(out.unresolvedCallSites.begin(), out.unresolvedCallSites.end(), callsite_less);
  if (!out.unresolvedCallSites.empty())
    out.warnings.push_back(std::to_string(out.unresolvedCallSites.size()) +
                           " call site(s) skipped: callee not declared");
  return out;
}

// ---------------------------------------------------------------------------
// JSON encoding
// ---------------------------------------------------------------------------

namespace {

json encode_symbol(const SymbolId& id) {
  if (!id.moduleScoped()) return id.value;
  return json{{"value", id.value}, {"scope", id.scope}};
}

SymbolId decode_full_symbol(const json& j) {
  if (j.is_string()) return codec::decode_symbol(j, {});
  return SymbolId(codec::string_field(j, "value"), codec::string_field(j, "scope"));
}

template <typename T, typename F>
json encode_all(const std::vector<T>& v, F f) {
  json arr = json::array();
  for (const auto& e : v) arr.push_back(f(e));
  return arr;
}

const json& array_of(const json& j, const char* name) {
  const json& v = codec::field(j, name);
  if (!v.is_array()) throw InputError(std::string("field '") + name + "' must be an array");
  return v;
}

template <typename E>
E enum_of(const json& j, const char* name, std::optional<E> (*parse)(std::string_view)) {
  std::string s = codec::string_field(j, name);
  auto e = parse(s);
  if (!e) throw InputError(std::string("invalid ") + name + " '" + s + "'");
  return *e;
}

std::optional<RetentionRule> parse_rule(std::string_view s) {
  for (auto r : {RetentionRule::R1Commits, RetentionRule::R2Activity, RetentionRule::R3Dup75, RetentionRule::R4Dup80})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

json encode_idioms(const std::set<Idiom>& idioms) {
  json arr = json::array();
  for (Idiom i : idioms) arr.push_back(to_string(i));
  return arr;
}

std::set<Idiom> decode_idioms(const json& j) {
  std::set<Idiom> out;
  for (const auto& e : j) {
    auto i = e.is_string() ? parse_idiom(e.get<std::string>()) : std::nullopt;
    if (!i) throw InputError("invalid idiom " + e.dump());
    out.insert(*i);
  }
  return out;
}

json encode_profile(const ProjectProfile& p) {
  return json{{"project", p.project},
              {"stars", p.stars},
              {"locMain", p.locMain},
              {"mainCategory", to_string(p.mainCategory)},
              {"totalCallSites", p.totalCallSites},
              {"testCallSites", p.testCallSites},
              {"implicitMain", p.implicitMain},
              {"implicitTest", p.implicitTest}};
}

ProjectProfile decode_profile(const json& j) {
  ProjectProfile p;
  p.project = codec::string_field(j, "project");
  p.stars = codec::int_field(j, "stars");
  p.locMain = codec::int_field(j, "locMain");
  p.mainCategory = enum_of(j, "mainCategory", parse_category);
  p.totalCallSites = codec::int_field(j, "totalCallSites");
  p.testCallSites = codec::int_field(j, "testCallSites");
  p.implicitMain = codec::int_field(j, "implicitMain");
  p.implicitTest = codec::int_field(j, "implicitTest");
  return p;
}

json encode_conversion(const ConversionLabel& c) {
  return json{{"decl", encode_symbol(c.conversion.decl)},
              {"source", codec::encode(c.conversion.source)},
              {"target", codec::encode(c.conversion.target)},
              {"viaFunctionValue", c.conversion.viaFunctionValue},
              {"conditional", c.conversion.conditional},
              {"fromImplicitClass", c.conversion.fromImplicitClass},
              {"kind", to_string(c.kind)},
              {"extensionSyntax", c.extensionSyntax},
              {"unrelated", c.unrelated},
              {"partners", encode_all(c.partners, encode_symbol)}};
}

ConversionLabel decode_conversion(const json& j, const ModuleId& module) {
  ConversionLabel c;
  c.conversion.decl = decode_full_symbol(codec::field(j, "decl"));
  c.conversion.source = codec::decode_type_ref(codec::field(j, "source"), module);
  c.conversion.target = codec::decode_type_ref(codec::field(j, "target"), module);
  c.conversion.viaFunctionValue = codec::bool_field(j, "viaFunctionValue");
  c.conversion.conditional = codec::bool_field(j, "conditional");
  c.conversion.fromImplicitClass = codec::bool_field(j, "fromImplicitClass");
  c.kind = enum_of(j, "kind", parse_conversion_kind);
  c.extensionSyntax = codec::bool_field(j, "extensionSyntax");
  c.unrelated = codec::bool_field(j, "unrelated");
  for (const auto& p : array_of(j, "partners")) c.partners.push_back(decode_full_symbol(p));
  return c;
}

json encode_declaration_label(const DeclarationLabel& l) {
  json params = json::array();
  for (const auto& p : l.implicitParams)
    params.push_back(json{{"name", p.name},
                          {"type", codec::encode(p.type)},
                          {"typeClass", p.typeClass},
                          {"constraint", p.constraint}});
  json j{{"id", encode_symbol(l.id)},
         {"module", l.module},
         {"project", l.project},
         {"category", to_string(l.category)},
         {"idioms", encode_idioms(l.idioms)},
         {"implicitParams", std::move(params)}};
  if (l.conversion) j["conversion"] = encode_conversion(*l.conversion);
  return j;
}

DeclarationLabel decode_declaration_label(const json& j) {
  DeclarationLabel l;
  l.id = decode_full_symbol(codec::field(j, "id"));
  l.module = codec::string_field(j, "module");
  l.project = codec::string_field(j, "project");
  l.category = enum_of(j, "category", parse_category);
  l.idioms = decode_idioms(array_of(j, "idioms"));
  for (const auto& p : array_of(j, "implicitParams"))
    l.implicitParams.push_back(ParameterLabel{codec::string_field(p, "name"),
                                              codec::decode_type_ref(codec::field(p, "type"), l.module),
                                              codec::bool_field(p, "typeClass"), codec::bool_field(p, "constraint")});
  if (j.contains("conversion")) l.conversion = decode_conversion(j["conversion"], l.module);
  return l;
}

json encode_callsite_label(const CallSiteLabel& l) {
  json origins = json::array();
  for (Origin o : l.argumentOrigins) origins.push_back(to_string(o));
  return json{{"site", codec::encode(l.site)},
              {"project", l.project},
              {"category", to_string(l.category)},
              {"idiom", to_string(l.idiom)},
              {"idioms", encode_idioms(l.idioms)},
              {"injectedCount", l.injectedCount},
              {"injectedText", l.injectedText},
              {"origin", to_string(l.origin)},
              {"argumentOrigins", std::move(origins)}};
}

CallSiteLabel decode_callsite_label(const json& j) {
  CallSiteLabel l;
  l.site = codec::decode_callsite(codec::field(j, "site"));
  l.project = codec::string_field(j, "project");
  l.category = enum_of(j, "category", parse_category);
  l.idiom = enum_of(j, "idiom", parse_callsite_idiom);
  l.idioms = decode_idioms(array_of(j, "idioms"));
  l.injectedCount = codec::int_field(j, "injectedCount");
  l.injectedText = codec::string_field(j, "injectedText");
  l.origin = enum_of(j, "origin", parse_origin);
  for (const auto& o : array_of(j, "argumentOrigins")) {
    auto parsed = o.is_string() ? parse_origin(o.get<std::string>()) : std::nullopt;
    if (!parsed) throw InputError("invalid origin " + o.dump());
    l.argumentOrigins.push_back(*parsed);
  }
  return l;
}

}  // namespace

json encode_decision(const ProjectDecision& d) {
  json failed = json::array();
  for (auto r : d.verdict.failedRules) failed.push_back(to_string(r));
  return json{{"project", d.project},
              {"retained", d.verdict.retained},
              {"failedRules", std::move(failed)},
              {"canonicalModules", d.canonicalModules}};
}

namespace {

ProjectDecision decode_decision(const json& j) {
  ProjectDecision d;
  d.project = codec::string_field(j, "project");
  d.verdict.retained = codec::bool_field(j, "retained");
  for (const auto& r : array_of(j, "failedRules")) {
    auto rule = r.is_string() ? parse_rule(r.get<std::string>()) : std::nullopt;
    if (!rule) throw InputError("invalid retention rule " + r.dump());
    d.verdict.failedRules.insert(*rule);
  }
  for (const auto& m : array_of(j, "canonicalModules")) d.canonicalModules.insert(m.get<std::string>());
  return d;
}

}  // namespace

json encode_corpus(const Corpus& c) {
  json unresolved = json::array();
  for (const auto& [module, symbols] : c.unresolved) {
    json syms = json::array();
    for (const auto& s : symbols) syms.push_back(encode_symbol(s));
    unresolved.push_back(json{{"module", module}, {"symbols", std::move(syms)}});
  }
  json decls = json::array();
  for (const auto& [_, d] : c.table.declarations()) decls.push_back(codec::encode(d));
  json externals = json::array();
  for (const auto& e : c.table.externals()) externals.push_back(encode_symbol(e));
  return json{{"projects", encode_all(c.projects, [](const auto& p) { return codec::encode(p); })},
              {"modules", encode_all(c.modules, [](const auto& m) { return codec::encode(m); })},
              {"declarations", std::move(decls)},
              {"externals", std::move(externals)},
              {"callsites", encode_all(c.callsites, [](const auto& s) { return codec::encode(s); })},
              {"unresolved", std::move(unresolved)}};
}

Corpus decode_corpus(const json& j) {
  Corpus c;
  for (const auto& p : array_of(j, "projects")) c.projects.push_back(codec::decode_project(p));
  for (const auto& m : array_of(j, "modules")) c.modules.push_back(codec::decode_module(m));
  for (const auto& d : array_of(j, "declarations")) c.table.put(codec::decode_declaration(d));
  for (const auto& e : array_of(j, "externals")) c.table.addExternal(decode_full_symbol(e));
  for (const auto& s : array_of(j, "callsites")) c.callsites.push_back(codec::decode_callsite(s));
  for (const auto& u : array_of(j, "unresolved")) {
    auto& set = c.unresolved[codec::string_field(u, "module")];
    for (const auto& s : array_of(u, "symbols")) set.insert(decode_full_symbol(s));
  }
  auto byId = [](const auto& a, const auto& b) { return a.id < b.id; };
  if (!std::is_sorted(c.projects.begin(), c.projects.end(), byId) ||
      !std::is_sorted(c.modules.begin(), c.modules.end(), byId) ||
      !std::is_sorted(c.callsites.begin(), c.callsites.end(), callsite_less))
    throw InputError("corpus records are not in canonical order");
  return c;
}

json encode_labeled(const LabeledCorpus& l) {
  return json{{"config", l.config.to_json()},
              {"corpus", encode_corpus(l.corpus)},
              {"decisions", encode_all(l.decisions, encode_decision)},
              {"projects", encode_all(l.projects, encode_profile)},
              {"declarations", encode_all(l.declarations, encode_declaration_label)},
              {"callsites", encode_all(l.callsites, encode_callsite_label)},
              {"unresolvedCallSites", encode_all(l.unresolvedCallSites, [](const auto& s) { return codec::encode(s); })},
              {"warnings", l.warnings}};
}

LabeledCorpus decode_labeled(const json& j) {
  LabeledCorpus l;
  l.config = RulesConfig::from_json(codec::field(j, "config"));
  l.corpus = decode_corpus(codec::field(j, "corpus"));
  for (const auto& d : array_of(j, "decisions")) l.decisions.push_back(decode_decision(d));
  for (const auto& p : array_of(j, "projects")) l.projects.push_back(decode_profile(p));
  for (const auto& d : array_of(j, "declarations")) l.declarations.push_back(decode_declaration_label(d));
  for (const auto& s : array_of(j, "callsites")) l.callsites.push_back(decode_callsite_label(s));
  for (const auto& s : array_of(j, "unresolvedCallSites")) l.unresolvedCallSites.push_back(codec::decode_callsite(s));
  for (const auto& w : array_of(j, "warnings")) l.warnings.push_back(w.get<std::string>());
  return l;
}

}  // namespace implicitus
