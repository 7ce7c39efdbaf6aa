#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "implicitus/labels.hpp"

namespace implicitus {

enum class CsvKind { Declarations, CallSites, Conversions, Parameters };

inline constexpr CsvKind kAllCsvKinds[] = {CsvKind::Declarations, CsvKind::CallSites, CsvKind::Conversions,
                                           CsvKind::Parameters};

using CsvRow = std::vector<std::string>;

struct CsvTable {
  CsvRow header;
  std::vector<CsvRow> rows;

  bool operator==(const CsvTable&) const = default;
};

std::string_view csv_file_name(CsvKind kind);
const CsvRow& csv_header(CsvKind kind);

/// Rows of one dataset, sorted by the dataset's key.
CsvTable build_csv(const LabeledCorpus& labeled, CsvKind kind);

/// RFC 4180 text: fields holding ',', '"', CR or LF are quoted with inner
/// quotes doubled; records end with LF.
std::string to_csv(const CsvTable& table);

/// Inverse of to_csv. Throws InputError on malformed input.
std::vector<CsvRow> parse_csv(std::string_view text);

/// Writes `csv_file_name(kind)` into `outDir` (created if missing) and
/// returns its path. Throws InputError when the file cannot be written.
std::filesystem::path export_csv(const LabeledCorpus& labeled, CsvKind kind, const std::filesystem::path& outDir);

enum class TopVariant { Declarations, CallSites };

struct TopRow {
  std::string project;
  long stars = 0;
  long loc = 0;
  long count = 0;

  bool operator==(const TopRow&) const = default;
};

/// Retained projects ranked by how many declarations (or call sites) carry
/// `label` (any label when none), count descending then id ascending; at
/// most `n` rows.
std::vector<TopRow> top_projects(const LabeledCorpus& labeled, std::optional<Idiom> label, size_t n,
                                 TopVariant variant);

/// Data behind the distribution plots: per-category ratio samples,
/// histograms and origin shares.
nlohmann::json plot_data(const LabeledCorpus& labeled);

/// The four datasets, top_projects.csv and plots.json. Returns the files
/// written, in a fixed order.
std::vector<std::filesystem::path> write_report(const LabeledCorpus& labeled, const std::filesystem::path& outDir,
                                                size_t topN);

}  // namespace implicitus
