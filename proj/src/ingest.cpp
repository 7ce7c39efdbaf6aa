#include "implicitus/ingest.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "implicitus/codec.hpp"
#include "implicitus/dedup.hpp"
#include "implicitus/errors.hpp"

namespace implicitus {

using codec::json;

SyntheticTree SyntheticTree::original(Range r, std::optional<SymbolId> sym) {
  SyntheticTree t;
  t.tag = Tag::Original;
  t.range = r;
  t.symbol = std::move(sym);
  return t;
}

SyntheticTree SyntheticTree::id(SymbolId sym) {
  SyntheticTree t;
  t.tag = Tag::Id;
  t.symbol = std::move(sym);
  return t;
}

SyntheticTree SyntheticTree::select(SyntheticTree qual, SymbolId member) {
  SyntheticTree t;
  t.tag = Tag::Select;
  t.children.push_back(std::move(qual));
  t.children.push_back(id(std::move(member)));
  return t;
}

SyntheticTree SyntheticTree::type_apply(SyntheticTree fn, std::vector<TypeRef> targs) {
  SyntheticTree t;
  t.tag = Tag::TypeApply;
  t.typeArgs = std::move(targs);
  t.children.push_back(std::move(fn));
  return t;
}

SyntheticTree SyntheticTree::apply(SyntheticTree fn, std::vector<SyntheticTree> args) {
  SyntheticTree t;
  t.tag = Tag::Apply;
  t.children.reserve(args.size() + 1);
  t.children.push_back(std::move(fn));
  for (auto& a : args) t.children.push_back(std::move(a));
  return t;
}

namespace {

SyntheticTree decode_tree(const json& j, const ModuleId& module) {
  std::string tag = codec::string_field(j, "tag");
  if (tag == "original") {
    std::optional<SymbolId> sym;
    if (j.contains("symbol")) sym = codec::decode_symbol(j["symbol"], module);
    return SyntheticTree::original(codec::decode_range(codec::field(j, "range")), std::move(sym));
  }
  if (tag == "idref") return SyntheticTree::id(codec::decode_symbol(codec::field(j, "symbol"), module));
  if (tag == "select") {
    SyntheticTree id = decode_tree(codec::field(j, "id"), module);
    if (id.tag != SyntheticTree::Tag::Id) throw InputError("select.id must be an idref");
    return SyntheticTree::select(decode_tree(codec::field(j, "qual"), module), *id.symbol);
  }
  if (tag == "typeapply") {
    std::vector<TypeRef> targs;
    const json& ta = codec::field(j, "typeArgs");
    if (!ta.is_array()) throw InputError("typeArgs must be an array");
    for (const auto& t : ta) targs.push_back(codec::decode_type_ref(t, module));
    return SyntheticTree::type_apply(decode_tree(codec::field(j, "fn"), module), std::move(targs));
  }
  if (tag == "apply") {
    std::vector<SyntheticTree> args;
    const json& a = codec::field(j, "args");
    if (!a.is_array()) throw InputError("args must be an array");
    for (const auto& e : a) args.push_back(decode_tree(e, module));
    return SyntheticTree::apply(decode_tree(codec::field(j, "fn"), module), std::move(args));
  }
  throw InputError("unknown synthetic tree tag '" + tag + "'");
}

json encode_tree(const SyntheticTree& t) {
  switch (t.tag) {
    case SyntheticTree::Tag::Original: {
      json j{{"tag", "original"}, {"range", codec::encode(t.range)}};
      if (t.symbol) j["symbol"] = t.symbol->value;
      return j;
    }
    case SyntheticTree::Tag::Id:
      return json{{"tag", "idref"}, {"symbol", t.symbol->value}};
    case SyntheticTree::Tag::Select:
      return json{{"tag", "select"}, {"qual", encode_tree(t.children[0])}, {"id", encode_tree(t.children[1])}};
    case SyntheticTree::Tag::TypeApply: {
      json targs = json::array();
      for (const auto& ta : t.typeArgs) targs.push_back(codec::encode(ta));
      return json{{"tag", "typeapply"}, {"fn", encode_tree(t.fn())}, {"typeArgs", std::move(targs)}};
    }
    case SyntheticTree::Tag::Apply: {
      json args = json::array();
      for (const auto& a : t.args()) args.push_back(encode_tree(a));
      return json{{"tag", "apply"}, {"fn", encode_tree(t.fn())}, {"args", std::move(args)}};
    }
  }
  return {};
}

SyntheticRecord decode_synthetic(const json& j) {
  SyntheticRecord r;
  r.module = codec::string_field(j, "module");
  r.path = codec::string_field(j, "path");
  if (j.contains("pathKind")) {
    auto k = parse_path_kind(codec::string_field(j, "pathKind"));
    if (!k) throw InputError("invalid pathKind");
    r.pathKind = *k;
  }
  r.tree = decode_tree(codec::field(j, "tree"), r.module);
  return r;
}

json encode_synthetic(const SyntheticRecord& r) {
  json j{{"kind", "synthetic"}, {"module", r.module}, {"path", r.path}, {"tree", encode_tree(r.tree)}};
  if (r.pathKind != PathKind::Main) j["pathKind"] = to_string(r.pathKind);
  return j;
}

}  // namespace

ParsedFacts parse_facts(std::istream& in, const std::string& source) {
  ParsedFacts out;
  std::unordered_set<SymbolId> seen;  // (id, module) pairs via scoped key
  std::string line;
  size_t lineNo = 0;
  auto where = [&] {
    return (source.empty() ? std::string() : source + ": ") + "at line " + std::to_string(lineNo);
  };
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON " + where());
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
      throw InputError("record without kind " + where());
    const std::string kind = j["kind"].get<std::string>();
    try {
      if (kind == "project") {
        out.projects.push_back(codec::decode_project(j));
      } else if (kind == "module") {
        out.modules.push_back(codec::decode_module(j));
      } else if (kind == "declaration") {
        Declaration d = codec::decode_declaration(j);
        SymbolId key(d.id.value, d.module + "\n" + d.id.scope);
        if (!seen.insert(key).second)
          throw InputError("duplicate declaration id " + d.id.value + " in module " + d.module);
        out.declarations.push_back(std::move(d));
      } else if (kind == "callsite") {
        out.callsites.push_back(codec::decode_callsite(j));
      } else if (kind == "synthetic") {
        out.synthetics.push_back(decode_synthetic(j));
      } else {
        throw InputError("unknown kind '" + kind + "'");
      }
    } catch (const InputError& e) {
      throw InputError(std::string(e.what()) + " " + where());
    }
  }
  return out;
}

ParsedFacts parse_facts_string(const std::string& text) {
  std::istringstream in(text);
  return parse_facts(in);
}

void serialize_facts(const ParsedFacts& facts, std::ostream& out) {
  for (const auto& p : facts.projects) out << codec::encode(p).dump() << '\n';
  for (const auto& m : facts.modules) out << codec::encode(m).dump() << '\n';
  for (const auto& d : facts.declarations) out << codec::encode(d).dump() << '\n';
  for (const auto& c : facts.callsites) out << codec::encode(c).dump() << '\n';
  for (const auto& s : facts.synthetics) out << encode_synthetic(s).dump() << '\n';
}

std::pair<Declaration, Declaration> desugar_implicit_class(const Declaration& cls) {
  const TypeSig* sig = cls.type();
  if (cls.kind != DeclKind::Class || !cls.isImplicit || !sig)
    throw InputError(cls.id.value + " is not an implicit class");
  if (!sig->ctor) throw InputError("implicit class " + cls.id.value + " has no constructor");

  std::vector<Param> explicitParams;
  const ParamList* implicitList = nullptr;
  for (const auto& l : *sig->ctor) {
    if (l.isImplicit)
      implicitList = &l;
    else
      explicitParams.insert(explicitParams.end(), l.params.begin(), l.params.end());
  }
  if (explicitParams.size() != 1)
    throw InputError("implicit class " + cls.id.value + " must take exactly one non-implicit parameter, got " +
                     std::to_string(explicitParams.size()));

  Declaration klass = cls;
  klass.isImplicit = false;

  Declaration conv;
  std::string value = cls.id.value;
  if (!value.empty() && value.back() == '#') value.pop_back();
  conv.id = SymbolId(value + "().", cls.id.scope);
  conv.module = cls.module;
  conv.kind = DeclKind::Def;
  conv.language = cls.language;
  conv.isImplicit = true;
  conv.visibility = cls.visibility;
  conv.location = cls.location;
  conv.fromImplicitClass = true;

  MethodSig m;
  m.typeParams = sig->typeParams;
  m.paramLists.push_back(ParamList{false, explicitParams});
  if (implicitList && !implicitList->params.empty()) m.paramLists.push_back(*implicitList);
  m.ret.head = cls.id;
  for (const auto& tp : sig->typeParams) m.ret.args.push_back(TypeRef{tp, {}});
  conv.signature = std::move(m);
  return {std::move(klass), std::move(conv)};
}

// ---------------------------------------------------------------------------

const ProjectMeta* Corpus::project(const std::string& id) const {
  auto it = std::lower_bound(projects.begin(), projects.end(), id,
                             [](const ProjectMeta& p, const std::string& k) { return p.id < k; });
  return it != projects.end() && it->id == id ? &*it : nullptr;
}

const ModuleMeta* Corpus::module(const ModuleId& id) const {
  auto it = std::lower_bound(modules.begin(), modules.end(), id,
                             [](const ModuleMeta& m, const ModuleId& k) { return m.id < k; });
  return it != modules.end() && it->id == id ? &*it : nullptr;
}

std::string Corpus::projectOf(const ModuleId& id) const {
  const ModuleMeta* m = module(id);
  return m ? m->project : std::string();
}

namespace {

template <typename T, typename Key>
std::vector<T> merge_meta(const std::vector<ParsedFacts>& fragments, std::vector<T> ParsedFacts::*member,
                          Key key, const char* what) {
  std::map<std::string, T> byId;
  for (const auto& f : fragments) {
    for (const auto& m : f.*member) {
      auto [it, inserted] = byId.emplace(key(m), m);
      if (!inserted && !(it->second == m))
        throw InconsistencyError(std::string("conflicting ") + what + " records for " + key(m));
    }
  }
  std::vector<T> out;
  out.reserve(byId.size());
  for (auto& [_, m] : byId) out.push_back(std::move(m));
  return out;
}

void collect_tree_symbols(const SyntheticTree& t, std::vector<SymbolId>& out) {
  if (t.symbol) out.push_back(*t.symbol);
  for (const auto& ta : t.typeArgs) collect_symbols(ta, out);
  for (const auto& c : t.children) collect_tree_symbols(c, out);
}

void collect_argument_symbols(const ArgumentTree& a, std::vector<SymbolId>& out) {
  out.push_back(a.decl);
  for (const auto& t : a.typeArgs) collect_symbols(t, out);
  for (const auto& c : a.args) collect_argument_symbols(c, out);
}

void collect_declaration_symbols(const Declaration& d, std::vector<SymbolId>& out) {
  auto lists = [&](const std::vector<ParamList>& ls) {
    for (const auto& l : ls)
      for (const auto& p : l.params) collect_symbols(p.type, out);
  };
  if (const MethodSig* m = d.method()) {
    out.insert(out.end(), m->typeParams.begin(), m->typeParams.end());
    lists(m->paramLists);
    collect_symbols(m->ret, out);
  } else if (const ValueSig* v = d.value()) {
    collect_symbols(v->type, out);
  } else if (const TypeSig* t = d.type()) {
    out.insert(out.end(), t->typeParams.begin(), t->typeParams.end());
    for (const auto& p : t->parents) collect_symbols(p, out);
    if (t->ctor) lists(*t->ctor);
  }
}

void collect_callsite_symbols(const CallSite& c, std::vector<SymbolId>& out) {
  out.push_back(c.callee);
  for (const auto& t : c.typeArgs) collect_symbols(t, out);
  for (const auto& a : c.implicitArgs) collect_argument_symbols(a, out);
}

bool same_shape(const Declaration& a, const Declaration& b) {
  return a.kind == b.kind && a.signature == b.signature && a.isImplicit == b.isImplicit;
}

}  // namespace

Corpus link_symbols(const std::vector<ParsedFacts>& fragments) {
  Corpus corpus;
  corpus.projects = merge_meta(fragments, &ParsedFacts::projects, [](const ProjectMeta& p) { return p.id; }, "project");
  corpus.modules = merge_meta(fragments, &ParsedFacts::modules, [](const ModuleMeta& m) { return m.id; }, "module");

  // Copies in cross-build duplicates that dedup drops lose against the
  // surviving build, so that labeling sees the declaration.
  std::map<std::string, std::vector<ModuleMeta>> byProject;
  for (const auto& m : corpus.modules) byProject[m.project].push_back(m);
  std::set<ModuleId> dropped;
  for (const auto& [project, metas] : byProject) {
    auto keep = canonical_modules(metas);
    for (const auto& m : metas)
      if (!keep.contains(m.id)) dropped.insert(m.id);
  }

  // Gather candidates per id, normalizing implicit classes on the way.
  std::map<SymbolId, std::vector<Declaration>> candidates;
  for (const auto& f : fragments) {
    for (const auto& d : f.declarations) {
      if (d.kind == DeclKind::Class && d.isImplicit && d.type() && d.type()->ctor) {
        auto [klass, conv] = desugar_implicit_class(d);
        candidates[klass.id].push_back(std::move(klass));
        candidates[conv.id].push_back(std::move(conv));
      } else {
        candidates[d.id].push_back(d);
      }
    }
  }

  for (auto& [id, decls] : candidates) {
    std::sort(decls.begin(), decls.end(), [&](const Declaration& a, const Declaration& b) {
      bool da = dropped.contains(a.module), db = dropped.contains(b.module);
      if (da != db) return db;
      if (a.module != b.module) return a.module < b.module;
      return a.fromImplicitClass && !b.fromImplicitClass;
    });
    const Declaration* chosen = &decls.front();
    for (size_t i = 1; i < decls.size(); ++i) {
      const Declaration& d = decls[i];
      if (d == *chosen || same_shape(d, *chosen)) continue;
      if (d.module == chosen->module) {
        // Both encodings of one implicit class: the explicit def wins.
        if (d.fromImplicitClass || chosen->fromImplicitClass) continue;
        throw InconsistencyError("declaration " + id.value + " appears twice in module " + d.module);
      }
      std::string pa = corpus.projectOf(chosen->module);
      if (!pa.empty() && pa == corpus.projectOf(d.module))
        throw InconsistencyError("declaration " + id.value + " has conflicting signatures in modules " +
                                 chosen->module + " and " + d.module + " of project " + pa);
    }
    corpus.table.put(*chosen);
  }

  std::vector<SymbolId> referenced;
  for (const auto& [id, d] : corpus.table.declarations()) collect_declaration_symbols(d, referenced);
  for (const auto& f : fragments) {
    for (const auto& c : f.callsites) collect_callsite_symbols(c, referenced);
    for (const auto& s : f.synthetics) collect_tree_symbols(s.tree, referenced);
  }
  for (const auto& id : referenced) corpus.table.addExternal(id);

  for (const auto& f : fragments)
    std::copy_if(f.callsites.begin(), f.callsites.end(), std::back_inserter(corpus.callsites),
                 [](const CallSite& c) { return c.isImplicit(); });
  std::sort(corpus.callsites.begin(), corpus.callsites.end(), callsite_less);
  corpus.callsites.erase(std::unique(corpus.callsites.begin(), corpus.callsites.end()), corpus.callsites.end());

  flag_unresolved(corpus);
  return corpus;
}

void flag_unresolved(Corpus& corpus) {
  corpus.unresolved.clear();
  std::vector<const ArgumentTree*> stack;
  for (const auto& c : corpus.callsites) {
    auto check = [&](const SymbolId& id) {
      if (!corpus.table.find(id)) corpus.unresolved[c.module].insert(id);
    };
    check(c.callee);
    for (const auto& a : c.implicitArgs) stack.push_back(&a);
    while (!stack.empty()) {
      const ArgumentTree* n = stack.back();
      stack.pop_back();
      check(n->decl);
      for (const auto& ch : n->args) stack.push_back(&ch);
    }
  }
}

}  // namespace implicitus
