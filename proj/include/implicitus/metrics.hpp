#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "implicitus/config.hpp"
#include "implicitus/ingest.hpp"

namespace implicitus {

enum class Origin { SameModule, SameProject, StandardLibrary, TestFramework, Dependency, ExternalUnknown };
enum class Category { SmallApp, LargeApp, Library, Tests };

inline constexpr Origin kAllOrigins[] = {Origin::SameModule,    Origin::SameProject, Origin::StandardLibrary,
                                         Origin::TestFramework, Origin::Dependency,  Origin::ExternalUnknown};
inline constexpr Category kAllCategories[] = {Category::SmallApp, Category::LargeApp, Category::Library,
                                              Category::Tests};

std::string_view to_string(Origin o);
std::string_view to_string(Category c);
std::optional<Origin> parse_origin(std::string_view s);
std::optional<Category> parse_category(std::string_view s);

/// Main-code LOC below which a non-indexed project counts as a small app.
inline constexpr long kSmallAppLoc = 1000;

struct ModuleStats {
  long implicitCallSites = 0;
  long totalCallSites = 0;
};

/// Share of call sites involving implicits; 0 for an empty module. Throws
/// InconsistencyError when the implicit count exceeds the total.
double implicit_ratio(const ModuleStats& stats);

/// Injected nodes of a call site: every argument tree node, plus the
/// conversion itself for whole-call sites.
long injected_count(const CallSite& cs);

/// Compiler-inserted code as text. A value renders as its simple name, a
/// call as name[typeArgs](args); siblings are joined by ','. Whole-call
/// sites wrap the forest in the conversion's name: conv(args) or conv.
std::string injected_text(const CallSite& cs);
std::string render_argument(const ArgumentTree& a);

/// Where the declaration of an injected symbol (or a callee) comes from,
/// seen from module `at`.
Origin origin(const SymbolId& decl, const ModuleId& at, const Corpus& corpus, const RulesConfig& config);

/// Category of code in a project. `projectLocMain` sums the main-code LOC of
/// the project's canonical modules.
Category project_category(const ProjectMeta& project, long projectLocMain, PathKind pathKind);

/// Five-number summary; the quartiles are medians of the lower and upper
/// halves, which exclude the median itself for odd counts.
struct Quartiles {
  size_t count = 0;
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;

  bool operator==(const Quartiles&) const = default;
};

Quartiles quartiles(std::vector<double> values);

/// Buckets "0".."10" then ">10".
inline constexpr size_t kHistogramBuckets = 12;
using Histogram = std::array<long, kHistogramBuckets>;

size_t histogram_bucket(long value);
std::string_view histogram_label(size_t bucket);

}  // namespace implicitus
