#include "implicitus/pipeline.hpp"

#include <fstream>

#include "implicitus/errors.hpp"
#include "implicitus/extract.hpp"
#include "implicitus/parallel.hpp"

namespace implicitus {

std::vector<ParsedFacts> parse_fact_files(const std::vector<std::filesystem::path>& files, unsigned jobs) {
  std::vector<ParsedFacts> out(files.size());
  parallel_for(files.size(), jobs, [&](size_t i) {
    std::ifstream in(files[i], std::ios::binary);
    if (!in) throw InputError("cannot open " + files[i].string());
    out[i] = parse_facts(in, files[i].string());
  });
  return out;
}

Corpus ingest_files(const std::vector<std::filesystem::path>& files, unsigned jobs) {
  return assemble_corpus(parse_fact_files(files, jobs));
}

}  // namespace implicitus
