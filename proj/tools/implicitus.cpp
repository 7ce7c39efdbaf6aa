// implicitus: command line front end of the library.
//
// Exit codes: 0 success, 1 input error, 2 internal inconsistency.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "implicitus/implicitus.hpp"

namespace fs = std::filesystem;
using namespace implicitus;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;

struct Globals {
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool strict = false;
  std::string logLevel = "info";
};

void write_text(const fs::path& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw InputError("cannot write " + path.string());
}

RulesConfig load_rules(const fs::path& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open rules file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("rules file " + path.string() + ": " + e.what());
  }
  return RulesConfig::from_json(j);
}

void report_unresolved(const Corpus& corpus, bool strict) {
  for (const auto& [module, symbols] : corpus.unresolved) {
    std::string msg = "module " + module + " references " + std::to_string(symbols.size()) +
                      " undeclared symbol(s), first " + symbols.begin()->value;
    if (strict) throw InconsistencyError(msg);
    spdlog::warn("{}", msg);
  }
}

int run_ingest(const Globals& g, const std::vector<fs::path>& facts, const fs::path& out) {
  Corpus corpus = ingest_files(facts, g.jobs);
  report_unresolved(corpus, g.strict);
  save_snapshot(out, corpus);
  spdlog::info("ingested {} file(s): {} project(s), {} module(s), {} declaration(s), {} implicit call site(s)",
               facts.size(), corpus.projects.size(), corpus.modules.size(), corpus.table.size(),
               corpus.callsites.size());
  return 0;
}

int run_dedup(const Globals& g, const fs::path& manifest, const fs::path& out) {
  std::ifstream in(manifest, std::ios::binary);
  if (!in) throw InputError("cannot open " + manifest.string());
  ParsedFacts facts = parse_facts(in, manifest.string());

  std::string text;
  size_t retained = 0;
  for (const auto& p : facts.projects) {
    std::vector<ProjectDecision> one;
    try {
      one = decide_projects({p}, facts.modules);
    } catch (const InputError& e) {
      if (g.strict) throw;
      spdlog::warn("project {} skipped: {}", p.id, e.what());
      continue;
    }
    retained += one.front().verdict.retained;
    text += encode_decision(one.front()).dump() + "\n";
  }
  write_text(out, text);
  spdlog::info("{} of {} project(s) retained", retained, facts.projects.size());
  return 0;
}

int run_classify(const Globals& g, const fs::path& corpusPath, const fs::path& out, const fs::path& rules) {
  RulesConfig config = load_rules(rules);
  LabeledCorpus labeled = label_corpus(load_corpus(corpusPath), config, {g.strict, g.jobs});
  for (const auto& w : labeled.warnings) spdlog::warn("{}", w);
  save_snapshot(out, labeled);
  spdlog::info("labeled {} declaration(s) and {} call site(s) in {} retained project(s)",
               labeled.declarations.size(), labeled.callsites.size(), labeled.projects.size());
  return 0;
}

int run_stats(const fs::path& labeledPath, const fs::path& out) {
  LabeledCorpus labeled = load_labeled(labeledPath);
  write_text(out, summarize(labeled).to_json().dump(2) + "\n");
  return 0;
}

int run_report(const fs::path& labeledPath, const fs::path& csvDir, size_t top) {
  LabeledCorpus labeled = load_labeled(labeledPath);
  for (const auto& path : write_report(labeled, csvDir, top)) spdlog::debug("wrote {}", path.string());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine implicit declarations and call sites from semantic facts"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--strict", g.strict, "Abort on unresolved references or invalid records");
  app.add_option("--log-level", g.logLevel, "trace, debug, info, warn, error or off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "critical", "off"}));

  std::vector<fs::path> facts;
  fs::path ingestOut;
  auto* ingest = app.add_subcommand("ingest", "Parse and link fact files into a corpus snapshot");
  ingest->add_option("facts", facts, "JSONL fact files")->required()->check(CLI::ExistingFile);
  ingest->add_option("-o,--output", ingestOut, "Corpus snapshot")->required();

  fs::path manifest, dedupOut;
  auto* dedup = app.add_subcommand("dedup", "Print the retention verdict of every project in a manifest");
  dedup->add_option("--manifest", manifest, "JSONL with project and module records")->required();
  dedup->add_option("-o,--output", dedupOut, "Output file (default stdout)");

  fs::path classifyIn, classifyOut, rules;
  auto* classify = app.add_subcommand("classify", "Filter and label a corpus snapshot");
  classify->add_option("corpus", classifyIn, "Corpus snapshot")->required();
  classify->add_option("-o,--output", classifyOut, "Labeled snapshot")->required();
  classify->add_option("--config", rules, "Rules JSON");

  fs::path statsIn, statsOut;
  auto* stats = app.add_subcommand("stats", "Summarize a labeled corpus as JSON");
  stats->add_option("labeled", statsIn, "Labeled snapshot")->required();
  stats->add_option("-o,--output", statsOut, "Summary JSON (default stdout)");

  fs::path reportIn, csvDir;
  size_t top = 10;
  auto* report = app.add_subcommand("report", "Export CSV datasets, top-project tables and plot data");
  report->add_option("labeled", reportIn, "Labeled snapshot")->required();
  report->add_option("--csv-dir", csvDir, "Output directory")->required();
  report->add_option("--top", top, "Rows per top-project table")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  auto logger = spdlog::stderr_logger_mt("implicitus");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(g.logLevel));

  try {
    if (*ingest) return run_ingest(g, facts, ingestOut);
    if (*dedup) return run_dedup(g, manifest, dedupOut);
    if (*classify) return run_classify(g, classifyIn, classifyOut, rules);
    if (*stats) return run_stats(statsIn, statsOut);
    if (*report) return run_report(reportIn, csvDir, top);
  } catch (const InputError& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  } catch (const InconsistencyError& e) {
    spdlog::error("inconsistent input: {}", e.what());
    return kExitInconsistent;
  } catch (const std::exception& e) {
    spdlog::error("internal error: {}", e.what());
    return kExitInconsistent;
  }
  return kExitInput;
}
