#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "implicitus/labels.hpp"
#include "implicitus/metrics.hpp"

namespace implicitus {

inline constexpr int kSummaryVersion = 1;

/// Aggregates of one slice of the corpus (everything, or one category).
/// Only integer counts and value multisets are kept so that merging is
/// associative and commutative; derived numbers appear in to_json.
struct SectionStats {
  long projects = 0;
  long declarations = 0;
  long implicitDeclarations = 0;
  long implicitParameterDeclarations = 0;
  long conversions = 0;
  long extensionMethods = 0;
  long extensionMethodsFromImplicitClass = 0;
  long implicitCallSites = 0;
  long totalCallSites = 0;
  long unresolvedCallSites = 0;
  long injectedTextLength = 0;

  std::vector<double> implicitRatios;  // one per project and code kind
  std::vector<long> injectedCounts;
  Histogram injectedCountHistogram{};
  Histogram implicitParamHistogram{};
  std::map<Idiom, long> idiomDeclarations;
  std::map<Idiom, long> idiomCallSites;
  std::map<CallSiteIdiom, long> callSiteIdioms;
  std::map<Origin, long> calleeOrigins;
  std::map<Origin, long> argumentOrigins;

  void merge(const SectionStats& other);
  nlohmann::json to_json() const;
};

struct Summary {
  SectionStats corpus;
  std::array<SectionStats, std::size(kAllCategories)> categories;

  SectionStats& category(Category c) { return categories[static_cast<size_t>(c)]; }
  const SectionStats& category(Category c) const { return categories[static_cast<size_t>(c)]; }

  void merge(const Summary& other);
  nlohmann::json to_json() const;
};

/// Contribution of one retained project. Throws InconsistencyError when the
/// project reports fewer call sites than were labeled implicit.
Summary project_summary(const LabeledCorpus& labeled, const std::string& project);

/// Merge of every retained project's contribution.
Summary summarize(const LabeledCorpus& labeled);

}  // namespace implicitus
