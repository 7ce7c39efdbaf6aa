#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "implicitus/labels.hpp"

namespace implicitus {

/// Binary snapshot layout: 8-byte magic, little-endian uint32 format
/// version, one kind byte, then the CBOR encoding of the payload.
inline constexpr char kSnapshotMagic[8] = {'I', 'M', 'P', 'L', 'S', 'N', 'A', 'P'};
inline constexpr std::uint32_t kSnapshotVersion = 1;

enum class SnapshotKind : std::uint8_t { Corpus = 1, Labeled = 2 };

std::vector<std::uint8_t> snapshot_bytes(const Corpus& corpus);
std::vector<std::uint8_t> snapshot_bytes(const LabeledCorpus& labeled);

/// Throw InputError for foreign files, other versions or the wrong kind.
Corpus corpus_from_bytes(const std::vector<std::uint8_t>& bytes);
LabeledCorpus labeled_from_bytes(const std::vector<std::uint8_t>& bytes);

void save_snapshot(const std::filesystem::path& path, const Corpus& corpus);
void save_snapshot(const std::filesystem::path& path, const LabeledCorpus& labeled);
Corpus load_corpus(const std::filesystem::path& path);
LabeledCorpus load_labeled(const std::filesystem::path& path);

}  // namespace implicitus
