#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "implicitus/classify.hpp"
#include "implicitus/config.hpp"
#include "implicitus/dedup.hpp"
#include "implicitus/ingest.hpp"
#include "implicitus/metrics.hpp"

namespace implicitus {

struct ProjectDecision {
  std::string project;
  RetentionVerdict verdict;
  std::set<ModuleId> canonicalModules;

  bool operator==(const ProjectDecision&) const = default;
};

/// Per retained project: what the call-site ratios are computed from.
struct ProjectProfile {
  std::string project;
  long stars = 0;
  long locMain = 0;  // canonical modules only
  Category mainCategory = Category::SmallApp;
  long totalCallSites = 0;
  long testCallSites = 0;
  long implicitMain = 0;  // labeled implicit sites outside test paths
  long implicitTest = 0;

  bool operator==(const ProjectProfile&) const = default;
};

struct ConversionLabel {
  Conversion conversion;
  ConversionKind kind = ConversionKind::Plain;
  bool extensionSyntax = false;
  bool unrelated = false;
  std::vector<SymbolId> partners;  // bidirectional counterparts, sorted

  bool operator==(const ConversionLabel&) const = default;
};

struct ParameterLabel {
  std::string name;
  TypeRef type;
  bool typeClass = false;
  bool constraint = false;

  bool operator==(const ParameterLabel&) const = default;
};

/// An in-corpus declaration that is implicit or takes implicit parameters.
struct DeclarationLabel {
  SymbolId id;
  ModuleId module;
  std::string project;
  Category category = Category::SmallApp;
  std::set<Idiom> idioms;
  std::vector<ParameterLabel> implicitParams;
  std::optional<ConversionLabel> conversion;

  bool operator==(const DeclarationLabel&) const = default;
};

struct CallSiteLabel {
  CallSite site;
  std::string project;
  Category category = Category::SmallApp;
  CallSiteIdiom idiom = CallSiteIdiom::Context;
  std::set<Idiom> idioms;  // the idiom plus the labels of an applied conversion
  long injectedCount = 0;
  std::string injectedText;
  Origin origin = Origin::ExternalUnknown;   // of the callee
  std::vector<Origin> argumentOrigins;       // per injected node, pre-order

  bool operator==(const CallSiteLabel&) const = default;
};

struct LabeledCorpus {
  Corpus corpus;
  RulesConfig config;
  std::vector<ProjectDecision> decisions;      // every project, by id
  std::vector<ProjectProfile> projects;        // retained projects, by id
  std::vector<DeclarationLabel> declarations;  // by (project, module, id)
  std::vector<CallSiteLabel> callsites;        // canonical call-site order
  std::vector<CallSite> unresolvedCallSites;   // skipped: callee not declared
  std::vector<std::string> warnings;

  bool operator==(const LabeledCorpus&) const = default;
};

struct LabelOptions {
  bool strict = false;  // abort on modules with unresolved references
  unsigned jobs = 1;
};

/// Applies project retention and module deduplication, then classifies
/// every declaration and call site of the surviving modules.
///
/// Throws InputError for invalid project metadata, and InconsistencyError
/// in strict mode when a surviving module references undeclared symbols.
/// Without `strict` such modules only produce warnings and their call sites
/// with undeclared callees are set aside.
LabeledCorpus label_corpus(Corpus corpus, const RulesConfig& config, const LabelOptions& options = {});

/// Per-project decisions alone, as emitted by the dedup command.
std::vector<ProjectDecision> decide_projects(const std::vector<ProjectMeta>& projects,
                                             const std::vector<ModuleMeta>& modules);

nlohmann::json encode_corpus(const Corpus& c);
Corpus decode_corpus(const nlohmann::json& j);

nlohmann::json encode_labeled(const LabeledCorpus& l);
LabeledCorpus decode_labeled(const nlohmann::json& j);

nlohmann::json encode_decision(const ProjectDecision& d);

}  // namespace implicitus
