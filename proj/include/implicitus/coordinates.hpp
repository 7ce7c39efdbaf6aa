#pragma once

#include <optional>
#include <string>

#include "implicitus/ingest.hpp"

namespace implicitus {

/// Published identity of a build module.
struct Artifact {
  std::string group;
  std::string artifact;

  std::string coordinate() const { return group + ":" + artifact; }
  auto operator<=>(const Artifact&) const = default;
};

/// Artifact of a module: its metadata when present, otherwise the module id
/// read as "group:artifact[:version]" (how dependency modules are named).
std::optional<Artifact> artifact_of(const ModuleId& module, const Corpus& corpus);

/// Artifact name without the cross-build suffix ("scalatest_2.13" ->
/// "scalatest", "munit_sjs1_3" -> "munit").
std::string base_artifact_name(const std::string& artifact);

}  // namespace implicitus
