#include "random_corpus.hpp"

#include <algorithm>
#include <string>

namespace implicitus::testing {

namespace {

constexpr const char* kStdlib = "org.scala-lang:scala-library:2.13.12";
constexpr const char* kScalatest = "org.scalatest:scalatest_2.13:3.2.15";
constexpr const char* kCats = "org.typelevel:cats-core_2.13:2.9.0";

struct Gen {
  std::mt19937& rng;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng); }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
};

Declaration make_decl(const ModuleId& module, SymbolId id, DeclKind kind, Signature sig, bool isImplicit,
                      const std::string& path, PathKind pathKind, int line) {
  Declaration d;
  d.id = std::move(id);
  d.module = module;
  d.kind = kind;
  d.isImplicit = isImplicit;
  d.location.path = path;
  d.location.unit = path;
  d.location.pathKind = pathKind;
  d.location.range = {line, 1, line, 30};
  d.signature = std::move(sig);
  return d;
}

TypeSig tsig(std::vector<SymbolId> tparams = {}, std::vector<TypeRef> parents = {}) {
  return TypeSig{std::move(tparams), std::move(parents), std::nullopt};
}

ParsedFacts library_fragment() {
  ParsedFacts f;
  int line = 1;
  auto add = [&](const char* module, const char* path, std::string id, DeclKind kind, Signature sig,
                 bool isImplicit = false) {
    f.declarations.push_back(
        make_decl(module, SymbolId(std::move(id)), kind, std::move(sig), isImplicit, path, PathKind::Main, line));
    line += 2;
  };
  auto A = [](const char* s) { return SymbolId(s); };

  add(kStdlib, "scala/Any.scala", "scala/Any#", DeclKind::Class, tsig());
  add(kStdlib, "scala/Int.scala", "scala/Int#", DeclKind::Class, tsig({}, {ref("scala/Any#")}));
  add(kStdlib, "scala/Unit.scala", "scala/Unit#", DeclKind::Class, tsig({}, {ref("scala/Any#")}));
  add(kStdlib, "java/lang/String.java", "java/lang/String#", DeclKind::Class, tsig());
  add(kStdlib, "scala/Function1.scala", "scala/Function1#", DeclKind::Trait,
      tsig({A("scala/Function1#[T1]"), A("scala/Function1#[R]")}));
  for (std::string c : {"scala/`=:=`#", "scala/`<:<`#"})
    add(kStdlib, "scala/typeConstraints.scala", c, DeclKind::Class,
        tsig({SymbolId(c + "[From]"), SymbolId(c + "[To]")},
             {ref("scala/Function1#", {ref(c + "[From]"), ref(c + "[To]")})}));
  add(kStdlib, "scala/collection/Seq.scala", "scala/collection/Seq#", DeclKind::Trait,
      tsig({A("scala/collection/Seq#[A]")},
           {ref("scala/Function1#", {ref("scala/Int#"), ref("scala/collection/Seq#[A]")})}));
  add(kStdlib, "scala/collection/immutable/List.scala", "scala/collection/immutable/List#", DeclKind::Class,
      tsig({A("scala/collection/immutable/List#[A]")},
           {ref("scala/collection/Seq#", {ref("scala/collection/immutable/List#[A]")})}));
  add(kStdlib, "lib/Show.scala", "lib/Show#", DeclKind::Trait, tsig({A("lib/Show#[A]")}));
  add(kStdlib, "lib/Monoid.scala", "lib/Monoid#", DeclKind::Trait, tsig({A("lib/Monoid#[A]")}));
  add(kStdlib, "lib/Ctx.scala", "lib/Ctx#", DeclKind::Class, tsig());
  add(kStdlib, "lib/Implicits.scala", "lib/Implicits.intShow.", DeclKind::Val,
      ValueSig{ref("lib/Show#", {ref("scala/Int#")})}, true);
  add(kStdlib, "lib/Implicits.scala", "lib/Implicits.ctx.", DeclKind::Val, ValueSig{ref("lib/Ctx#")}, true);
  add(kStdlib, "lib/Implicits.scala", "lib/Implicits.listShow().", DeclKind::Def,
      MethodSig{{A("lib/Implicits.listShow().[T]")},
                {ParamList{true, {{"s", ref("lib/Show#", {ref("lib/Implicits.listShow().[T]")})}}}},
                ref("lib/Show#", {ref("scala/collection/immutable/List#", {ref("lib/Implicits.listShow().[T]")})})},
      true);
  add(kStdlib, "lib/Implicits.scala", "lib/Implicits.refl().", DeclKind::Def,
      MethodSig{{A("lib/Implicits.refl().[A]")},
                {},
                ref("scala/`=:=`#", {ref("lib/Implicits.refl().[A]"), ref("lib/Implicits.refl().[A]")})},
      true);

  add(kScalatest, "org/scalatest/Pos.scala", "org/scalatest/Pos.here.", DeclKind::Val, ValueSig{ref("lib/Ctx#")},
      true);
  add(kScalatest, "org/scalatest/Assertions.scala", "org/scalatest/Assertions.check().", DeclKind::Def,
      MethodSig{{}, {ParamList{false, {{"x", ref("scala/Any#")}}}, ParamList{true, {{"pos", ref("lib/Ctx#")}}}},
                ref("scala/Unit#")});

  add(kCats, "cats/Instances.scala", "cats/Instances.monoidInt.", DeclKind::Val,
      ValueSig{ref("lib/Monoid#", {ref("scala/Int#")})}, true);
  add(kCats, "cats/Syntax.scala", "cats/Syntax.combineAll().", DeclKind::Def,
      MethodSig{{A("cats/Syntax.combineAll().[A]")},
                {ParamList{false, {{"xs", ref("scala/collection/immutable/List#", {ref("cats/Syntax.combineAll().[A]")})}}},
                 ParamList{true, {{"m", ref("lib/Monoid#", {ref("cats/Syntax.combineAll().[A]")})}}}},
                ref("cats/Syntax.combineAll().[A]")});
  return f;
}

// Injectable declarations known outside any project.
const std::vector<SymbolId>& library_values() {
  static const std::vector<SymbolId> v{SymbolId("lib/Implicits.intShow."), SymbolId("lib/Implicits.ctx."),
                                       SymbolId("org/scalatest/Pos.here."), SymbolId("cats/Instances.monoidInt.")};
  return v;
}

const std::vector<SymbolId>& library_defs() {
  static const std::vector<SymbolId> v{SymbolId("lib/Implicits.listShow()."), SymbolId("lib/Implicits.refl().")};
  return v;
}

const std::vector<SymbolId>& library_callees() {
  static const std::vector<SymbolId> v{SymbolId("org/scalatest/Assertions.check()."),
                                       SymbolId("cats/Syntax.combineAll()."), SymbolId("lib/Implicits.listShow().")};
  return v;
}

TypeRef random_type(Gen& g, int depth, const std::vector<SymbolId>& tparams, const std::vector<std::string>& own) {
  int choice = g.uniform(0, depth > 0 ? 12 : 5);
  auto sub = [&] { return random_type(g, depth - 1, tparams, own); };
  switch (choice) {
    case 0: return ref("scala/Int#");
    case 1: return ref("java/lang/String#");
    case 2: return ref("lib/Ctx#");
    case 3: return tparams.empty() ? ref("scala/Any#") : TypeRef{g.pick(tparams), {}};
    case 4: return own.empty() ? ref("scala/Unit#") : ref(g.pick(own));
    case 5: return tparams.empty() ? ref("scala/Int#") : TypeRef{g.pick(tparams), {}};
    case 6: return ref("lib/Show#", {sub()});
    case 7: return ref("lib/Monoid#", {sub()});
    case 8: return ref("scala/Function1#", {sub(), sub()});
    case 9: return ref("scala/`=:=`#", {sub(), sub()});
    case 10: return ref("scala/`<:<`#", {sub(), sub()});
    case 11: return ref("scala/collection/immutable/List#", {sub()});
    default: return own.empty() ? ref("scala/Any#") : ref(own.front(), {sub()});  // Box[_]
  }
}

struct FileChoice {
  std::string path;
  PathKind kind;
};

FileChoice random_file(Gen& g, const std::string& pre) {
  int r = g.uniform(0, 9);
  if (r < 4) return {pre + "A.scala", PathKind::Main};
  if (r < 7) return {pre + "B.scala", PathKind::Main};
  if (r < 8) return {pre + "Gen.scala", PathKind::Generated};
  return {pre + "ATest.scala", PathKind::Test};
}

ArgumentTree random_arg(Gen& g, int depth, const std::vector<SymbolId>& values, const std::vector<SymbolId>& defs) {
  if (depth <= 0 || defs.empty() || g.chance(0.55)) return ArgumentTree::value(g.pick(values));
  std::vector<TypeRef> targs;
  if (g.chance(0.5)) targs.push_back(g.chance(0.5) ? ref("scala/Int#") : ref("lib/Ctx#"));
  std::vector<ArgumentTree> args;
  for (int i = g.uniform(0, 2); i > 0; --i) args.push_back(random_arg(g, depth - 1, values, defs));
  return ArgumentTree::call(g.pick(defs), std::move(targs), std::move(args));
}

}  // namespace

ProjectMeta random_project(std::mt19937& rng, const std::string& id) {
  Gen g{rng};
  static const std::vector<long> stars{0, 3, 5, 6, 40, 500, 501, 2000};
  static const std::vector<long> commits{1, 2, 3, 50, 900};
  // Spans of 0, 30, 60, 61 and 400 days from the first commit.
  static const std::vector<std::string> lasts{"2019-01-01", "2019-01-31", "2019-03-02", "2019-03-03", "2020-02-05"};
  static const std::vector<double> dups{0.0, 0.1, 0.7499, 0.75, 0.77, 0.7999, 0.8, 0.95, 1.0};
  ProjectMeta p;
  p.id = id;
  p.stars = g.pick(stars);
  p.commits = g.pick(commits);
  p.firstCommit = "2019-01-01";
  p.lastCommit = g.pick(lasts);
  p.dupRatio = g.pick(dups);
  p.inIndex = g.chance(0.3);
  return p;
}

std::vector<ArgumentTree> random_forest(std::mt19937& rng, int maxDepth, int maxWidth) {
  Gen g{rng};
  static const std::vector<SymbolId> values{SymbolId("a/V.x."), SymbolId("a/V.y."), SymbolId("local1", "m")};
  static const std::vector<SymbolId> defs{SymbolId("a/F.f()."), SymbolId("a/F.g().")};
  std::vector<ArgumentTree> out;
  for (int i = g.uniform(0, maxWidth); i > 0; --i) out.push_back(random_arg(g, g.uniform(0, maxDepth), values, defs));
  return out;
}

std::vector<ParsedFacts> random_fragments(std::mt19937& rng, const RandomCorpusOptions& o) {
  Gen g{rng};
  std::vector<ParsedFacts> out{library_fragment()};

  int projects = g.uniform(1, o.maxProjects);
  for (int p = 0; p < projects; ++p) {
    ParsedFacts f;
    std::string pid = "gen/p" + std::to_string(p);
    ProjectMeta meta = random_project(rng, pid);
    if (g.chance(0.7)) {  // most projects should survive retention
      meta.commits = std::max(meta.commits, 2L);
      meta.lastCommit = "2020-02-05";
    }
    f.projects.push_back(meta);

    std::vector<SymbolId> projectCallees;  // methods of earlier modules
    int modules = g.uniform(1, o.maxModules);
    for (int m = 0; m < modules; ++m) {
      bool cross = o.crossBuilds && m > 0 && g.chance(0.25);
      std::string group = "gen.p" + std::to_string(p);
      std::string artifact = "m" + std::to_string(cross ? m - 1 : m);
      ModuleMeta meta;
      meta.project = pid;
      meta.group = group;
      meta.artifact = artifact + "_2.13";
      meta.version = "1.0";
      meta.platform = cross ? Platform::JS : Platform::JVM;
      meta.scalaVersion = "2.13.12";
      meta.id = group + ":" + artifact + (cross ? "_sjs1" : "") + "_2.13:1.0";
      meta.locMain = g.uniform(20, 900);
      meta.locTest = g.uniform(0, 300);
      const ModuleId& mid = meta.id;
      std::string pre = "gen/p" + std::to_string(p) + "/m" + std::to_string(m) + "/";

      int line = 1;
      auto next_line = [&] {
        line += 2;
        return line;
      };
      auto add = [&](SymbolId id, DeclKind kind, Signature sig, bool isImplicit, const FileChoice& file) {
        Declaration d = make_decl(mid, std::move(id), kind, std::move(sig), isImplicit, file.path, file.kind,
                                  next_line());
        if (g.chance(0.15)) d.visibility = g.chance(0.5) ? Visibility::Private : Visibility::Protected;
        if (g.chance(0.2)) d.location.scope = Scope::Nested;
        f.declarations.push_back(d);
        return f.declarations.back().id;
      };

      // Own types: a generic class, a trait and a plain class.
      std::string box = pre + "Box#", tr = pre + "Tr#", node = pre + "Node#";
      SymbolId boxA(box + "[A]");
      std::vector<TypeRef> boxParents{ref("scala/Any#")};
      int shape = g.uniform(0, 3);
      if (shape == 1) boxParents.push_back(ref("scala/collection/Seq#", {TypeRef{boxA, {}}}));
      if (shape == 2) boxParents.push_back(ref("lib/Show#", {TypeRef{boxA, {}}}));
      if (shape == 3) boxParents.push_back(ref("scala/Function1#", {TypeRef{boxA, {}}, ref("scala/Int#")}));
      add(SymbolId(box), DeclKind::Class, tsig({boxA}, boxParents), false, random_file(g, pre));
      add(SymbolId(tr), DeclKind::Trait, tsig({}, g.chance(0.5) ? std::vector{ref("lib/Show#", {ref("scala/Int#")})}
                                                                 : std::vector<TypeRef>{}),
          false, random_file(g, pre));
      add(SymbolId(node), DeclKind::Class, tsig({}, {ref(tr)}), false, random_file(g, pre));
      std::vector<std::string> own{box, tr, node};

      std::vector<SymbolId> values = library_values();
      std::vector<SymbolId> defs = library_defs();
      std::vector<SymbolId> callees = library_callees();
      callees.insert(callees.end(), projectCallees.begin(), projectCallees.end());

      for (int i = g.uniform(0, o.maxDefs); i > 0; --i) {
        bool member = g.chance(0.4);
        std::string id = (member ? box : pre + "O.") + "f" + std::to_string(i) + "().";
        std::vector<SymbolId> tparams;
        for (int k = g.uniform(0, 2); k > 0; --k) tparams.emplace_back(id + "[T" + std::to_string(k) + "]");
        std::vector<SymbolId> scope = tparams;
        if (member) scope.push_back(boxA);
        MethodSig sig;
        sig.typeParams = tparams;
        for (int l = g.uniform(0, 2); l > 0; --l) {
          ParamList pl;
          for (int k = g.uniform(l == 1 ? 1 : 0, 2); k > 0; --k)
            pl.params.push_back({"x" + std::to_string(k), random_type(g, 2, scope, own)});
          sig.paramLists.push_back(std::move(pl));
        }
        if (g.chance(0.6)) {
          ParamList pl{true, {}};
          for (int k = g.uniform(0, 3); k > 0; --k)
            pl.params.push_back({"i" + std::to_string(k), random_type(g, 2, scope, own)});
          sig.paramLists.push_back(std::move(pl));
        }
        sig.ret = g.chance(0.15) ? ref("scala/Unit#") : random_type(g, 2, scope, own);
        bool isImplicit = g.chance(0.45);
        SymbolId sym = add(SymbolId(id), g.chance(0.05) ? DeclKind::Macro : DeclKind::Def, std::move(sig), isImplicit,
                           random_file(g, pre));
        callees.push_back(sym);
        projectCallees.push_back(sym);
        if (isImplicit) defs.push_back(sym);
      }

      for (int i = g.uniform(0, o.maxVals); i > 0; --i) {
        std::string id = pre + "O.v" + std::to_string(i) + ".";
        bool isImplicit = g.chance(0.75);
        DeclKind kind = g.chance(0.15) ? DeclKind::Var : DeclKind::Val;
        SymbolId sym = add(SymbolId(id), kind, ValueSig{random_type(g, 2, {}, own)}, isImplicit, random_file(g, pre));
        if (isImplicit) values.push_back(sym);
      }

      if (g.chance(0.2)) {
        Declaration d = make_decl(mid, SymbolId("local" + std::to_string(g.uniform(0, 40)), mid), DeclKind::Val,
                                  ValueSig{random_type(g, 1, {}, own)}, true, pre + "A.scala", PathKind::Main,
                                  next_line());
        d.location.scope = Scope::BlockLocal;
        f.declarations.push_back(d);
        values.push_back(d.id);
      }

      if (g.chance(0.35)) {
        std::string id = pre + "O.C" + std::to_string(m) + "#";
        std::vector<SymbolId> tparams;
        if (g.chance(0.5)) tparams.emplace_back(id + "[T]");
        std::vector<ParamList> ctor{ParamList{false, {{"self", random_type(g, 1, tparams, own)}}}};
        if (g.chance(0.5)) ctor.push_back(ParamList{true, {{"ev", random_type(g, 2, tparams, own)}}});
        add(SymbolId(id), DeclKind::Class, TypeSig{tparams, {ref("scala/Any#")}, ctor}, true, random_file(g, pre));
        callees.push_back(SymbolId(pre + "O.C" + std::to_string(m) + "()."));
      }

      long mainSites = 0, testSites = 0;
      for (int i = g.uniform(0, o.maxSites); i > 0; --i) {
        CallSite cs;
        cs.module = mid;
        cs.callee = o.unresolved && g.chance(0.04) ? SymbolId("gen/ghost/Missing.f().") : g.pick(callees);
        FileChoice file = random_file(g, pre);
        cs.location.path = file.path;
        cs.location.unit = file.path;
        cs.location.pathKind = file.kind;
        int l = next_line();
        cs.location.range = {l, 5, l, 25};
        if (g.chance(0.3)) cs.typeArgs.push_back(random_type(g, 1, {}, own));
        for (int k = g.uniform(0, 3); k > 0; --k) cs.implicitArgs.push_back(random_arg(g, 2, values, defs));
        cs.wholeCallSynthetic = cs.implicitArgs.empty() || g.chance(0.2);
        (file.kind == PathKind::Test ? testSites : mainSites)++;
        f.callsites.push_back(std::move(cs));
      }
      meta.testCallSites = testSites + g.uniform(0, 30);
      meta.totalCallSites = mainSites + meta.testCallSites + g.uniform(0, 200);
      f.modules.push_back(meta);
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace implicitus::testing
