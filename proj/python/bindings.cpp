// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the pure Python wrapper.

#include <fstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "implicitus/implicitus.hpp"

namespace py = pybind11;
using namespace implicitus;

namespace {

RulesConfig rules_from_text(const std::string& text) {
  if (text.empty()) return {};
  try {
    return RulesConfig::from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("rules: ") + e.what());
  }
}

std::vector<std::string> decide_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest, std::ios::binary);
  if (!in) throw InputError("cannot open " + manifest.string());
  ParsedFacts facts = parse_facts(in, manifest.string());
  std::vector<std::string> out;
  for (const auto& d : decide_projects(facts.projects, facts.modules)) out.push_back(encode_decision(d).dump());
  return out;
}

}  // namespace

PYBIND11_MODULE(_implicitus, m) {
  m.doc() = "Implicit declaration and call-site mining";

  auto input = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
  (void)input;

  py::class_<Corpus>(m, "Corpus")
      .def_property_readonly("projects", [](const Corpus& c) { return c.projects.size(); })
      .def_property_readonly("modules", [](const Corpus& c) { return c.modules.size(); })
      .def_property_readonly("declarations", [](const Corpus& c) { return c.table.size(); })
      .def_property_readonly("callsites", [](const Corpus& c) { return c.callsites.size(); })
      .def("save", [](const Corpus& c, const std::filesystem::path& p) { save_snapshot(p, c); })
      .def("to_json_text", [](const Corpus& c) { return encode_corpus(c).dump(); });

  py::class_<LabeledCorpus>(m, "LabeledCorpus")
      .def_property_readonly("projects", [](const LabeledCorpus& l) { return l.projects.size(); })
      .def_property_readonly("declarations", [](const LabeledCorpus& l) { return l.declarations.size(); })
      .def_property_readonly("callsites", [](const LabeledCorpus& l) { return l.callsites.size(); })
      .def_readonly("warnings", &LabeledCorpus::warnings)
      .def("save", [](const LabeledCorpus& l, const std::filesystem::path& p) { save_snapshot(p, l); })
      .def("summary_text", [](const LabeledCorpus& l) { return summarize(l).to_json().dump(); })
      .def("csv", [](const LabeledCorpus& l, const std::string& name) {
        for (CsvKind k : kAllCsvKinds)
          if (csv_file_name(k) == name || csv_file_name(k) == name + ".csv") return to_csv(build_csv(l, k));
        throw InputError("unknown dataset " + name);
      });

  m.def("ingest", &ingest_files, py::arg("paths"), py::arg("jobs") = 1u, py::call_guard<py::gil_scoped_release>());
  m.def("load_corpus", &load_corpus, py::arg("path"));
  m.def("load_labeled", &load_labeled, py::arg("path"));
  m.def(
      "classify",
      [](Corpus corpus, const std::string& rules, bool strict, unsigned jobs) {
        return label_corpus(std::move(corpus), rules_from_text(rules), {strict, jobs});
      },
      py::arg("corpus"), py::arg("rules") = "", py::arg("strict") = false, py::arg("jobs") = 1u,
      py::call_guard<py::gil_scoped_release>());
  m.def("write_report", &write_report, py::arg("labeled"), py::arg("out_dir"), py::arg("top") = 10);
  m.def("decide_manifest", &decide_manifest, py::arg("manifest"));
  m.def(
      "retain_project",
      [](const std::string& id, long stars, long commits, const std::string& first, const std::string& last,
         double dupRatio, bool inIndex) {
        RetentionVerdict v = retain_project({id, stars, commits, first, last, dupRatio, inIndex});
        std::vector<std::string> failed;
        for (RetentionRule r : v.failedRules) failed.emplace_back(to_string(r));
        return py::make_tuple(v.retained, failed);
      },
      py::arg("id"), py::arg("stars"), py::arg("commits"), py::arg("first_commit"), py::arg("last_commit"),
      py::arg("dup_ratio"), py::arg("in_index"));
  m.def("default_rules_text", [] { return RulesConfig{}.to_json().dump(); });
}
