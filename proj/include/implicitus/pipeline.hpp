#pragma once

#include <filesystem>
#include <vector>

#include "implicitus/ingest.hpp"

namespace implicitus {

/// Parses fact files on up to `jobs` threads; results keep argument order.
/// Errors name the offending file.
std::vector<ParsedFacts> parse_fact_files(const std::vector<std::filesystem::path>& files, unsigned jobs = 1);

/// parse_fact_files followed by assemble_corpus.
Corpus ingest_files(const std::vector<std::filesystem::path>& files, unsigned jobs = 1);

}  // namespace implicitus
