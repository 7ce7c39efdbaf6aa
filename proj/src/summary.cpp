#include "implicitus/summary.hpp"

#include <algorithm>

#include "implicitus/errors.hpp"

namespace implicitus {

using nlohmann::json;

namespace {

template <typename K>
void add_counts(std::map<K, long>& into, const std::map<K, long>& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

json histogram_json(const Histogram& h) {
  json j = json::object();
  for (size_t b = 0; b < kHistogramBuckets; ++b) j[std::string(histogram_label(b))] = h[b];
  return j;
}

json quartiles_json(const Quartiles& q) {
  return json{{"count", q.count}, {"min", q.min}, {"q1", q.q1}, {"median", q.median}, {"q3", q.q3}, {"max", q.max}};
}

double share(long part, long whole) { return whole ? static_cast<double>(part) / static_cast<double>(whole) : 0.0; }

json origins_json(const std::map<Origin, long>& counts) {
  long total = 0;
  for (const auto& [_, n] : counts) total += n;
  json c = json::object(), s = json::object();
  for (Origin o : kAllOrigins) {
    auto it = counts.find(o);
    long n = it == counts.end() ? 0 : it->second;
    c[std::string(to_string(o))] = n;
    s[std::string(to_string(o))] = share(n, total);
  }
  return json{{"counts", std::move(c)}, {"shares", std::move(s)}};
}

template <typename K, size_t N>
json keyed_counts(const std::map<K, long>& counts, const K (&keys)[N]) {
  json j = json::object();
  for (K k : keys) {
    auto it = counts.find(k);
    j[std::string(to_string(k))] = it == counts.end() ? 0 : it->second;
  }
  return j;
}

constexpr CallSiteIdiom kCallSiteIdioms[] = {CallSiteIdiom::TypeClass, CallSiteIdiom::TypeProof, CallSiteIdiom::Context};

}  // namespace

void SectionStats::merge(const SectionStats& o) {
  projects += o.projects;
  declarations += o.declarations;
  implicitDeclarations += o.implicitDeclarations;
  implicitParameterDeclarations += o.implicitParameterDeclarations;
  conversions += o.conversions;
  extensionMethods += o.extensionMethods;
  extensionMethodsFromImplicitClass += o.extensionMethodsFromImplicitClass;
  implicitCallSites += o.implicitCallSites;
  totalCallSites += o.totalCallSites;
  unresolvedCallSites += o.unresolvedCallSites;
  injectedTextLength += o.injectedTextLength;
  implicitRatios.insert(implicitRatios.end(), o.implicitRatios.begin(), o.implicitRatios.end());
  injectedCounts.insert(injectedCounts.end(), o.injectedCounts.begin(), o.injectedCounts.end());
  for (size_t b = 0; b < kHistogramBuckets; ++b) {
    injectedCountHistogram[b] += o.injectedCountHistogram[b];
    implicitParamHistogram[b] += o.implicitParamHistogram[b];
  }
  add_counts(idiomDeclarations, o.idiomDeclarations);
  add_counts(idiomCallSites, o.idiomCallSites);
  add_counts(callSiteIdioms, o.callSiteIdioms);
  add_counts(calleeOrigins, o.calleeOrigins);
  add_counts(argumentOrigins, o.argumentOrigins);
}

json SectionStats::to_json() const {
  std::vector<double> counts(injectedCounts.begin(), injectedCounts.end());
  return json{
      {"counts",
       {{"projects", projects},
        {"declarations", declarations},
        {"implicitDeclarations", implicitDeclarations},
        {"implicitParameterDeclarations", implicitParameterDeclarations},
        {"conversions", conversions},
        {"extensionMethods", extensionMethods},
        {"extensionMethodsFromImplicitClass", extensionMethodsFromImplicitClass},
        {"implicitCallSites", implicitCallSites},
        {"totalCallSites", totalCallSites},
        {"unresolvedCallSites", unresolvedCallSites}}},
      {"implicitCallSiteShare", share(implicitCallSites, totalCallSites)},
      {"implicitRatio", quartiles_json(quartiles(implicitRatios))},
      {"injectedCountHistogram", histogram_json(injectedCountHistogram)},
      {"injectedCountMedian", quartiles(std::move(counts)).median},
      {"implicitParamHistogram", histogram_json(implicitParamHistogram)},
      {"idiomDeclarations", keyed_counts(idiomDeclarations, kAllIdioms)},
      {"idiomCallSites", keyed_counts(idiomCallSites, kAllIdioms)},
      {"callSiteIdioms", keyed_counts(callSiteIdioms, kCallSiteIdioms)},
      {"calleeOrigins", origins_json(calleeOrigins)},
      {"argumentOrigins", origins_json(argumentOrigins)},
      {"injectedTextLength", injectedTextLength},
  };
}

void Summary::merge(const Summary& other) {
  corpus.merge(other.corpus);
  for (size_t i = 0; i < categories.size(); ++i) categories[i].merge(other.categories[i]);
}

json Summary::to_json() const {
  json cats = json::object();
  for (Category c : kAllCategories) cats[std::string(to_string(c))] = category(c).to_json();
  return json{{"summaryVersion", kSummaryVersion}, {"corpus", corpus.to_json()}, {"categories", std::move(cats)}};
}

namespace {

struct ProjectSlice {
  const ProjectProfile* profile = nullptr;
  std::vector<const DeclarationLabel*> declarations;
  std::vector<const CallSiteLabel*> callsites;
  std::vector<const CallSite*> unresolved;
};

Summary contribution(const LabeledCorpus& labeled, const ProjectSlice& slice) {
  const ProjectProfile& p = *slice.profile;
  Summary s;
  SectionStats& main = s.category(p.mainCategory);
  SectionStats& tests = s.category(Category::Tests);
  auto both = [&](Category c, auto&& f) {
    f(s.corpus);
    f(s.category(c));
  };

  long mainTotal = p.totalCallSites - p.testCallSites;
  double mainRatio = implicit_ratio({p.implicitMain, mainTotal});
  double testRatio = implicit_ratio({p.implicitTest, p.testCallSites});
  double overall = implicit_ratio({p.implicitMain + p.implicitTest, p.totalCallSites});

  s.corpus.projects = 1;
  s.corpus.totalCallSites = p.totalCallSites;
  if (p.totalCallSites > 0) s.corpus.implicitRatios.push_back(overall);
  main.projects = 1;
  main.totalCallSites = mainTotal;
  if (mainTotal > 0) main.implicitRatios.push_back(mainRatio);
  tests.totalCallSites += p.testCallSites;
  if (p.testCallSites > 0) tests.implicitRatios.push_back(testRatio);

  bool hasTestCode = p.testCallSites > 0;
  for (const DeclarationLabel* d : slice.declarations) {
    hasTestCode |= d->category == Category::Tests;
    const Declaration* decl = labeled.corpus.table.find(d->id);
    both(d->category, [&](SectionStats& x) {
      x.declarations++;
      if (decl && decl->isImplicit) x.implicitDeclarations++;
      if (!d->implicitParams.empty()) {
        x.implicitParameterDeclarations++;
        x.implicitParamHistogram[histogram_bucket(static_cast<long>(d->implicitParams.size()))]++;
      }
      if (d->conversion) {
        x.conversions++;
        if (d->conversion->kind == ConversionKind::ExtensionMethod) {
          x.extensionMethods++;
          if (d->conversion->conversion.fromImplicitClass) x.extensionMethodsFromImplicitClass++;
        }
      }
      for (Idiom i : d->idioms) x.idiomDeclarations[i]++;
    });
  }

  for (const CallSiteLabel* c : slice.callsites) {
    hasTestCode |= c->category == Category::Tests;
    both(c->category, [&](SectionStats& x) {
      x.implicitCallSites++;
      x.injectedCounts.push_back(c->injectedCount);
      x.injectedCountHistogram[histogram_bucket(c->injectedCount)]++;
      x.injectedTextLength += static_cast<long>(c->injectedText.size());
      for (Idiom i : c->idioms) x.idiomCallSites[i]++;
      x.callSiteIdioms[c->idiom]++;
      x.calleeOrigins[c->origin]++;
      for (Origin o : c->argumentOrigins) x.argumentOrigins[o]++;
    });
  }

  for (const CallSite* u : slice.unresolved)
    both(u->location.pathKind == PathKind::Test ? Category::Tests : p.mainCategory,
         [](SectionStats& x) { x.unresolvedCallSites++; });

  if (hasTestCode) tests.projects = 1;
  return s;
}

std::map<std::string, ProjectSlice> slices(const LabeledCorpus& labeled) {
  std::map<std::string, ProjectSlice> out;
  for (const auto& p : labeled.projects) out[p.project].profile = &p;
  auto slot = [&](const std::string& project) -> ProjectSlice* {
    auto it = out.find(project);
    if (it == out.end()) throw InconsistencyError("label for project " + project + " without a profile");
    return &it->second;
  };
  for (const auto& d : labeled.declarations) slot(d.project)->declarations.push_back(&d);
  for (const auto& c : labeled.callsites) slot(c.project)->callsites.push_back(&c);
  for (const auto& u : labeled.unresolvedCallSites) slot(labeled.corpus.projectOf(u.module))->unresolved.push_back(&u);
  return out;
}

}  // namespace

Summary project_summary(const LabeledCorpus& labeled, const std::string& project) {
  auto all = slices(labeled);
  auto it = all.find(project);
  if (it == all.end()) throw InputError("project " + project + " is not part of the labeled corpus");
  return contribution(labeled, it->second);
}

Summary summarize(const LabeledCorpus& labeled) {
  Summary s;
  for (const auto& [_, slice] : slices(labeled)) s.merge(contribution(labeled, slice));
  return s;
}

}  // namespace implicitus
