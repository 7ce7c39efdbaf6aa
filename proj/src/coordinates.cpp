#include "implicitus/coordinates.hpp"

namespace implicitus {

std::optional<Artifact> artifact_of(const ModuleId& module, const Corpus& corpus) {
  if (const ModuleMeta* m = corpus.module(module)) {
    if (m->group.empty() && m->artifact.empty()) return std::nullopt;
    return Artifact{m->group, m->artifact};
  }
  auto first = module.find(':');
  if (first == std::string::npos || first == 0) return std::nullopt;
  auto second = module.find(':', first + 1);
  std::string artifact = module.substr(first + 1, second == std::string::npos ? std::string::npos : second - first - 1);
  if (artifact.empty()) return std::nullopt;
  return Artifact{module.substr(0, first), artifact};
}

std::string base_artifact_name(const std::string& artifact) {
  auto cut = artifact.find('_');
  return cut == std::string::npos ? artifact : artifact.substr(0, cut);
}

}  // namespace implicitus
