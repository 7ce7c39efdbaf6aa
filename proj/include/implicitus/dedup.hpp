#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "implicitus/model.hpp"

namespace implicitus {

enum class RetentionRule { R1Commits, R2Activity, R3Dup75, R4Dup80 };

std::string_view to_string(RetentionRule r);

struct RetentionVerdict {
  bool retained = true;
  std::set<RetentionRule> failedRules;

  bool operator==(const RetentionVerdict&) const = default;
};

/// Minimum span between first and last commit for a project to count as
/// active for two months.
inline constexpr int kMinActiveDays = 61;

/// Corpus retention rules for a project:
///   R1  more than one commit
///   R2  active for at least kMinActiveDays
///   R3  indexed, or duplication below 75%, or more than 5 stars
///   R4  indexed, or duplication below 80%, or more than 500 stars
///
/// Throws InputError for unparseable dates, lastCommit before firstCommit or
/// a duplication ratio outside [0, 1].
RetentionVerdict retain_project(const ProjectMeta& meta);

/// Days between two YYYY-MM-DD dates (last - first). Throws InputError.
long days_between(const std::string& first, const std::string& last);

/// Orders Scala versions numerically on (major, minor, patch); versions that
/// do not parse sort below every valid one.
int compare_scala_versions(std::string_view a, std::string_view b);

/// Modules of one project that survive cross-build deduplication. Within a
/// (group, artifact) group the winner is the JVM build, then JS, then
/// Native, then the highest Scala version, then the smallest id. Modules
/// with neither group nor artifact are kept as they are.
std::set<ModuleId> canonical_modules(std::span<const ModuleMeta> modules);

}  // namespace implicitus
