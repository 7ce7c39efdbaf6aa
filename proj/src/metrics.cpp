#include "implicitus/metrics.hpp"

#include <algorithm>
#include <span>

#include "implicitus/coordinates.hpp"
#include "implicitus/errors.hpp"

namespace implicitus {

std::string_view to_string(Origin o) {
  switch (o) {
    case Origin::SameModule: return "SAME_MODULE";
    case Origin::SameProject: return "SAME_PROJECT";
    case Origin::StandardLibrary: return "STANDARD_LIBRARY";
    case Origin::TestFramework: return "TEST_FRAMEWORK";
    case Origin::Dependency: return "DEPENDENCY";
    case Origin::ExternalUnknown: return "EXTERNAL_UNKNOWN";
  }
  return "?";
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::SmallApp: return "SMALL_APP";
    case Category::LargeApp: return "LARGE_APP";
    case Category::Library: return "LIBRARY";
    case Category::Tests: return "TESTS";
  }
  return "?";
}

std::optional<Origin> parse_origin(std::string_view s) {
  for (Origin o : kAllOrigins)
    if (to_string(o) == s) return o;
  return std::nullopt;
}

std::optional<Category> parse_category(std::string_view s) {
  for (Category c : kAllCategories)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

double implicit_ratio(const ModuleStats& stats) {
  if (stats.implicitCallSites < 0 || stats.implicitCallSites > stats.totalCallSites)
    throw InconsistencyError(std::to_string(stats.implicitCallSites) + " implicit call sites out of " +
                             std::to_string(stats.totalCallSites));
  if (stats.totalCallSites == 0) return 0.0;
  return static_cast<double>(stats.implicitCallSites) / static_cast<double>(stats.totalCallSites);
}

namespace {

long count_nodes(const ArgumentTree& a) {
  long n = 1;
  for (const auto& c : a.args) n += count_nodes(c);
  return n;
}

void render(const ArgumentTree& a, std::string& out) {
  out += simple_name(a.decl.value);
  if (!a.isCall()) return;
  if (!a.typeArgs.empty()) {
    out += '[';
    for (size_t i = 0; i < a.typeArgs.size(); ++i) {
      if (i) out += ',';
      out += to_display(a.typeArgs[i]);
    }
    out += ']';
  }
  out += '(';
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ',';
    render(a.args[i], out);
  }
  out += ')';
}

}  // namespace

long injected_count(const CallSite& cs) {
  long n = cs.wholeCallSynthetic ? 1 : 0;
  for (const auto& a : cs.implicitArgs) n += count_nodes(a);
  return n;
}

std::string render_argument(const ArgumentTree& a) {
  std::string out;
  render(a, out);
  return out;
}

std::string injected_text(const CallSite& cs) {
  std::string forest;
  for (size_t i = 0; i < cs.implicitArgs.size(); ++i) {
    if (i) forest += ',';
    render(cs.implicitArgs[i], forest);
  }
  if (!cs.wholeCallSynthetic) return forest;
  std::string out = simple_name(cs.callee.value);
  if (!forest.empty()) out += "(" + forest + ")";
  return out;
}

Origin origin(const SymbolId& decl, const ModuleId& at, const Corpus& corpus, const RulesConfig& config) {
  const Declaration* d = corpus.table.find(decl);
  if (!d) return Origin::ExternalUnknown;
  if (d->module == at) return Origin::SameModule;
  std::string project = corpus.projectOf(d->module);
  if (!project.empty() && project == corpus.projectOf(at)) return Origin::SameProject;
  auto artifact = artifact_of(d->module, corpus);
  if (!artifact) return Origin::ExternalUnknown;
  if (artifact->coordinate() == config.stdlibArtifact) return Origin::StandardLibrary;
  if (config.testFrameworks.contains(base_artifact_name(artifact->artifact))) return Origin::TestFramework;
  return Origin::Dependency;
}

Category project_category(const ProjectMeta& project, long projectLocMain, PathKind pathKind) {
  if (pathKind == PathKind::Test) return Category::Tests;
  if (project.inIndex) return Category::Library;
  return projectLocMain < kSmallAppLoc ? Category::SmallApp : Category::LargeApp;
}

namespace {

double median_of_sorted(std::span<const double> v) {
  size_t n = v.size();
  if (n == 0) return 0.0;
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

}  // namespace

Quartiles quartiles(std::vector<double> values) {
  Quartiles q;
  q.count = values.size();
  if (values.empty()) return q;
  std::sort(values.begin(), values.end());
  std::span<const double> all(values);
  size_t n = values.size();
  q.min = values.front();
  q.max = values.back();
  q.median = median_of_sorted(all);
  if (n == 1) {
    q.q1 = q.q3 = values.front();
    return q;
  }
  q.q1 = median_of_sorted(all.first(n / 2));
  q.q3 = median_of_sorted(all.last(n / 2));
  return q;
}

size_t histogram_bucket(long value) {
  if (value < 0) value = 0;
  return value > 10 ? kHistogramBuckets - 1 : static_cast<size_t>(value);
}

std::string_view histogram_label(size_t bucket) {
  static constexpr std::string_view labels[kHistogramBuckets] = {"0", "1", "2", "3", "4",  "5",
                                                                 "6", "7", "8", "9", "10", ">10"};
  return bucket < kHistogramBuckets ? labels[bucket] : ">10";
}

}  // namespace implicitus
