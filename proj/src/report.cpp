#include "implicitus/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <tuple>

#include "implicitus/errors.hpp"
#include "implicitus/summary.hpp"

namespace implicitus {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view csv_file_name(CsvKind kind) {
  switch (kind) {
    case CsvKind::Declarations: return "declarations.csv";
    case CsvKind::CallSites: return "callsites.csv";
    case CsvKind::Conversions: return "conversions.csv";
    case CsvKind::Parameters: return "parameters.csv";
  }
  return "unknown.csv";
}

const CsvRow& csv_header(CsvKind kind) {
  static const CsvRow declarations{"project", "module",     "id",     "kind", "visibility",
                                   "fromImplicitClass", "idioms", "path", "line"};
  static const CsvRow callsites{"project",     "module", "callee", "idiom", "injectedCount",
                                "injectedLen", "origin", "path",   "line"};
  static const CsvRow conversions{"project",      "module",     "id",         "kind",      "conditional",
                                  "unrelated", "bidirPartner", "sourceHead", "targetHead"};
  static const CsvRow parameters{"project", "module", "decl", "paramName", "typeHead", "isTypeClass", "isConstraint"};
  switch (kind) {
    case CsvKind::Declarations: return declarations;
    case CsvKind::CallSites: return callsites;
    case CsvKind::Conversions: return conversions;
    case CsvKind::Parameters: break;
  }
  return parameters;
}

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

std::string joined_idioms(const std::set<Idiom>& idioms) {
  std::vector<std::string> names;
  for (Idiom i : idioms) names.emplace_back(to_string(i));
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ';';
    out += n;
  }
  return out;
}

std::string joined_ids(const std::vector<SymbolId>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ';';
    out += id.value;
  }
  return out;
}

}  // namespace

CsvTable build_csv(const LabeledCorpus& labeled, CsvKind kind) {
  CsvTable t;
  t.header = csv_header(kind);
  const SymbolTable& table = labeled.corpus.table;

  switch (kind) {
    case CsvKind::Declarations:
      for (const auto& d : labeled.declarations) {
        const Declaration& decl = *table.find(d.id);
        t.rows.push_back({d.project, d.module, d.id.value, std::string(to_string(decl.kind)),
                          std::string(to_string(decl.visibility)), flag(decl.fromImplicitClass),
                          joined_idioms(d.idioms), decl.location.path, std::to_string(decl.location.range.startLine)});
      }
      break;

    case CsvKind::CallSites: {
      std::vector<const CallSiteLabel*> sites;
      for (const auto& c : labeled.callsites) sites.push_back(&c);
      std::stable_sort(sites.begin(), sites.end(), [](const CallSiteLabel* a, const CallSiteLabel* b) {
        return std::tie(a->project, a->site.module, a->site.location.path, a->site.location.range) <
               std::tie(b->project, b->site.module, b->site.location.path, b->site.location.range);
      });
      for (const CallSiteLabel* c : sites)
        t.rows.push_back({c->project, c->site.module, c->site.callee.value, std::string(to_string(c->idiom)),
                          std::to_string(c->injectedCount), std::to_string(c->injectedText.size()),
                          std::string(to_string(c->origin)), c->site.location.path,
                          std::to_string(c->site.location.range.startLine)});
      break;
    }

    case CsvKind::Conversions:
      for (const auto& d : labeled.declarations) {
        if (!d.conversion) continue;
        const ConversionLabel& c = *d.conversion;
        t.rows.push_back({d.project, d.module, d.id.value, std::string(to_string(c.kind)),
                          flag(c.conversion.conditional), flag(c.unrelated), joined_ids(c.partners),
                          c.conversion.source.head.value, c.conversion.target.head.value});
      }
      break;

    case CsvKind::Parameters:
      for (const auto& d : labeled.declarations)
        for (const auto& p : d.implicitParams)
          t.rows.push_back({d.project, d.module, d.id.value, p.name, p.type.head.value, flag(p.typeClass),
                            flag(p.constraint)});
      break;
  }
  return t;
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  auto record = [&](const CsvRow& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      const std::string& f = row[i];
      if (f.find_first_of(",\"\r\n") == std::string::npos) {
        out += f;
        continue;
      }
      out += '"';
      for (char ch : f) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    }
    out += '\n';
  };
  record(table.header);
  for (const auto& r : table.rows) record(r);
  return out;
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  size_t i = 0;
  bool fieldStarted = false;
  auto endField = [&] {
    row.push_back(std::move(field));
    field.clear();
    fieldStarted = false;
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '"' && !fieldStarted) {
      ++i;
      for (;;) {
        if (i >= text.size()) throw InputError("unterminated quoted CSV field");
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field += text[i++];
      }
      fieldStarted = true;
      if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
        throw InputError("unexpected character after quoted CSV field");
      continue;
    }
    if (ch == ',') {
      endField();
      ++i;
    } else if (ch == '\n' || ch == '\r') {
      endField();
      rows.push_back(std::move(row));
      row.clear();
      i += (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ? 2 : 1;
    } else {
      field += ch;
      fieldStarted = true;
      ++i;
    }
  }
  if (fieldStarted || !row.empty()) {
    endField();
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << content;
  out.close();
  if (!out) throw InputError("failed writing " + path.string());
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw InputError("cannot create output directory " + dir.string());
}

}  // namespace

fs::path export_csv(const LabeledCorpus& labeled, CsvKind kind, const fs::path& outDir) {
  ensure_dir(outDir);
  fs::path path = outDir / csv_file_name(kind);
  write_file(path, to_csv(build_csv(labeled, kind)));
  return path;
}

std::vector<TopRow> top_projects(const LabeledCorpus& labeled, std::optional<Idiom> label, size_t n,
                                 TopVariant variant) {
  std::map<std::string, long> counts;
  for (const auto& p : labeled.projects) counts[p.project] = 0;
  auto matches = [&](const std::set<Idiom>& idioms) { return !label || idioms.contains(*label); };
  if (variant == TopVariant::Declarations) {
    for (const auto& d : labeled.declarations)
      if (matches(d.idioms)) counts[d.project]++;
  } else {
    for (const auto& c : labeled.callsites)
      if (matches(c.idioms)) counts[c.project]++;
  }

  std::vector<TopRow> rows;
  for (const auto& p : labeled.projects) rows.push_back({p.project, p.stars, p.locMain, counts[p.project]});
  std::sort(rows.begin(), rows.end(), [](const TopRow& a, const TopRow& b) {
    return a.count != b.count ? a.count > b.count : a.project < b.project;
  });
  if (rows.size() > n) rows.resize(n);
  return rows;
}

json plot_data(const LabeledCorpus& labeled) {
  Summary s = summarize(labeled);
  json ratios = json::object(), injected = json::object(), params = json::object(), origins = json::object();
  auto add = [&](const std::string& name, const SectionStats& x) {
    std::vector<double> r = x.implicitRatios;
    std::sort(r.begin(), r.end());
    ratios[name] = r;
    json section = x.to_json();
    injected[name] = section["injectedCountHistogram"];
    params[name] = section["implicitParamHistogram"];
    origins[name] = section["argumentOrigins"]["shares"];
  };
  add("ALL", s.corpus);
  for (Category c : kAllCategories) add(std::string(to_string(c)), s.category(c));
  return json{{"plotsVersion", 1},
              {"implicitRatios", std::move(ratios)},
              {"injectedCountHistogram", std::move(injected)},
              {"implicitParamHistogram", std::move(params)},
              {"argumentOriginShares", std::move(origins)}};
}

std::vector<fs::path> write_report(const LabeledCorpus& labeled, const fs::path& outDir, size_t topN) {
  if (topN < 1) throw InputError("--top must be at least 1");
  std::vector<fs::path> written;
  for (CsvKind k : kAllCsvKinds) written.push_back(export_csv(labeled, k, outDir));

  CsvTable top;
  top.header = {"label", "variant", "rank", "project", "stars", "loc", "count"};
  std::vector<std::pair<std::string, std::optional<Idiom>>> labels{{"ALL", std::nullopt}};
  for (Idiom i : kAllIdioms) labels.emplace_back(std::string(to_string(i)), i);
  for (const auto& [name, label] : labels) {
    for (auto [variant, vname] : {std::pair(TopVariant::Declarations, "DECLARATIONS"),
                                  std::pair(TopVariant::CallSites, "CALLSITES")}) {
      auto rows = top_projects(labeled, label, topN, variant);
      for (size_t r = 0; r < rows.size(); ++r)
        top.rows.push_back({name, vname, std::to_string(r + 1), rows[r].project, std::to_string(rows[r].stars),
                            std::to_string(rows[r].loc), std::to_string(rows[r].count)});
    }
  }
  written.push_back(outDir / "top_projects.csv");
  write_file(written.back(), to_csv(top));

  written.push_back(outDir / "plots.json");
  write_file(written.back(), plot_data(labeled).dump(2) + "\n");
  return written;
}

}  // namespace implicitus
