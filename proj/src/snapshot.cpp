#include "implicitus/snapshot.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "implicitus/errors.hpp"

namespace implicitus {

namespace {

constexpr size_t kHeaderSize = sizeof(kSnapshotMagic) + 4 + 1;

std::vector<std::uint8_t> frame(SnapshotKind kind, const nlohmann::json& payload) {
  std::vector<std::uint8_t> out(std::begin(kSnapshotMagic), std::end(kSnapshotMagic));
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>(kSnapshotVersion >> shift));
  out.push_back(static_cast<std::uint8_t>(kind));
  auto cbor = nlohmann::json::to_cbor(payload);
  out.insert(out.end(), cbor.begin(), cbor.end());
  return out;
}

nlohmann::json unframe(const std::vector<std::uint8_t>& bytes, SnapshotKind expected) {
  if (bytes.size() < kHeaderSize || !std::equal(std::begin(kSnapshotMagic), std::end(kSnapshotMagic), bytes.begin()))
    throw InputError("not an implicitus snapshot");
  std::uint32_t version = 0;
  for (int i = 0; i < 4; ++i) version |= static_cast<std::uint32_t>(bytes[sizeof(kSnapshotMagic) + i]) << (8 * i);
  if (version != kSnapshotVersion)
    throw InputError("unsupported snapshot version " + std::to_string(version));
  auto kind = static_cast<SnapshotKind>(bytes[kHeaderSize - 1]);
  if (kind != expected)
    throw InputError(expected == SnapshotKind::Corpus ? "expected a corpus snapshot, got a labeled one"
                                                      : "expected a labeled snapshot, got an unlabeled corpus");
  try {
    return nlohmann::json::from_cbor(bytes.begin() + kHeaderSize, bytes.end());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("corrupt snapshot: ") + e.what());
  }
}

std::vector<std::uint8_t> read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_all(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace

std::vector<std::uint8_t> snapshot_bytes(const Corpus& corpus) {
  return frame(SnapshotKind::Corpus, encode_corpus(corpus));
}

std::vector<std::uint8_t> snapshot_bytes(const LabeledCorpus& labeled) {
  return frame(SnapshotKind::Labeled, encode_labeled(labeled));
}

Corpus corpus_from_bytes(const std::vector<std::uint8_t>& bytes) {
  return decode_corpus(unframe(bytes, SnapshotKind::Corpus));
}

LabeledCorpus labeled_from_bytes(const std::vector<std::uint8_t>& bytes) {
  return decode_labeled(unframe(bytes, SnapshotKind::Labeled));
}

void save_snapshot(const std::filesystem::path& path, const Corpus& corpus) { write_all(path, snapshot_bytes(corpus)); }

void save_snapshot(const std::filesystem::path& path, const LabeledCorpus& labeled) {
  write_all(path, snapshot_bytes(labeled));
}

Corpus load_corpus(const std::filesystem::path& path) { return corpus_from_bytes(read_all(path)); }

LabeledCorpus load_labeled(const std::filesystem::path& path) { return labeled_from_bytes(read_all(path)); }

}  // namespace implicitus
