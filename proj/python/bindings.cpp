#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mmm/error.hpp"
#include "mmm/ingest.hpp"
#include "mmm/pipeline.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> labels(const std::vector<mmm::ActivityId>& ids) {
  std::vector<std::string> out;
  for (const auto& a : ids) out.push_back(a.str());
  return out;
}

std::vector<std::string> labels(const std::set<mmm::ActivityId>& ids) {
  return labels(std::vector<mmm::ActivityId>(ids.begin(), ids.end()));
}

std::vector<mmm::ActivityId> ids(const std::vector<std::string>& labels) {
  std::vector<mmm::ActivityId> out;
  for (const auto& l : labels) out.emplace_back(l);
  return out;
}

std::optional<std::string> label(const std::optional<mmm::ActivityId>& a) {
  if (!a) return std::nullopt;
  return a->str();
}

std::optional<mmm::ActivityId> id(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return mmm::ActivityId(*s);
}

std::map<std::string, int> level_map(const mmm::LevelAssignment& levels) {
  std::map<std::string, int> out;
  for (const auto& [a, l] : levels.level) out.emplace(a.str(), l);
  return out;
}

}  // namespace

PYBIND11_MODULE(_mmm, m) {
  m.doc() = "DSM/ISM process analysis: triangulation, clustering and mixed matrix model";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::exception<mmm::Error>(m, "MmmError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const mmm::Error& e) {
      const auto& cls = error_type.get_stored();
      py::object instance = cls(e.what());
      instance.attr("code") = e.code();
      PyErr_SetObject(cls.ptr(), instance.ptr());
    }
  });

  py::class_<mmm::Dependency>(m, "Dependency")
      .def(py::init([](int number, std::optional<std::string> source, std::optional<std::string> target,
                       const std::string& kind) {
             if (kind != "io" && kind != "control") throw mmm::Error("bad-kind", "kind must be 'io' or 'control'");
             return mmm::Dependency{{number}, id(source), id(target),
                                    kind == "io" ? mmm::DependencyKind::InputOutput
                                                 : mmm::DependencyKind::Control};
           }),
           py::arg("id"), py::arg("source") = py::none(), py::arg("target") = py::none(),
           py::arg("kind") = "io")
      .def_property_readonly("id", [](const mmm::Dependency& d) { return d.id.number; })
      .def_property_readonly("source", [](const mmm::Dependency& d) { return label(d.source); })
      .def_property_readonly("target", [](const mmm::Dependency& d) { return label(d.target); })
      .def_property_readonly("kind", [](const mmm::Dependency& d) { return std::string(mmm::to_string(d.kind)); })
      .def("__repr__", [](const mmm::Dependency& d) {
        return "Dependency(" + std::to_string(d.id.number) + ", " + label(d.source).value_or("-") + " -> " +
               label(d.target).value_or("-") + ", " + std::string(mmm::to_string(d.kind)) + ")";
      });

  py::class_<mmm::ProcessModel>(m, "ProcessModel")
      .def(py::init([](std::string name, const std::vector<std::string>& activities,
                       std::vector<mmm::Dependency> dependencies) {
             return mmm::ProcessModel{std::move(name), ids(activities), std::move(dependencies)};
           }),
           py::arg("name"), py::arg("activities"), py::arg("dependencies"))
      .def_readonly("name", &mmm::ProcessModel::name)
      .def_property_readonly("activities", [](const mmm::ProcessModel& pm) { return labels(pm.activities); })
      .def_readonly("dependencies", &mmm::ProcessModel::dependencies)
      .def(py::self == py::self);

  py::class_<mmm::Dsm>(m, "Dsm")
      .def_property_readonly("ordering", [](const mmm::Dsm& d) { return labels(d.ordering()); })
      .def("marked", &mmm::Dsm::marked, py::arg("row"), py::arg("col"))
      .def("mark_count", &mmm::Dsm::mark_count)
      .def("to_matrix",
           [](const mmm::Dsm& d) {
             std::vector<std::vector<int>> grid(d.size(), std::vector<int>(d.size(), 0));
             for (std::size_t r = 0; r < d.size(); ++r)
               for (std::size_t c = 0; c < d.size(); ++c) grid[r][c] = d.marked(r, c) ? 1 : 0;
             return grid;
           })
      .def("to_csv", &mmm::dsm_to_csv)
      .def("__len__", &mmm::Dsm::size);

  py::class_<mmm::FeedbackEntry>(m, "FeedbackEntry")
      .def_readonly("row", &mmm::FeedbackEntry::row)
      .def_readonly("col", &mmm::FeedbackEntry::col)
      .def_property_readonly("source", [](const mmm::FeedbackEntry& e) { return e.source.str(); })
      .def_property_readonly("target", [](const mmm::FeedbackEntry& e) { return e.target.str(); })
      .def_property_readonly("cls", [](const mmm::FeedbackEntry& e) { return std::string(mmm::to_string(e.cls)); });

  py::class_<mmm::TriangulationResult>(m, "TriangulationResult")
      .def_property_readonly("ordering", [](const mmm::TriangulationResult& t) { return labels(t.ordering); })
      .def_property_readonly("blocks",
                             [](const mmm::TriangulationResult& t) {
                               std::vector<std::string> out;
                               for (const auto& b : t.blocks) out.push_back(b.label);
                               return out;
                             })
      .def_property_readonly("cycles",
                             [](const mmm::TriangulationResult& t) {
                               std::vector<std::vector<std::string>> out;
                               for (const auto& c : t.cycles) out.push_back(labels(c.members));
                               return out;
                             })
      .def_property_readonly("steps", [](const mmm::TriangulationResult& t) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& s : t.steps) out.emplace_back(std::string(mmm::to_string(s.action)), s.subject);
        return out;
      });

  py::class_<mmm::Ism>(m, "Ism")
      .def_property_readonly("rows", [](const mmm::Ism& i) { return labels(i.rows()); })
      .def_property_readonly("cols",
                             [](const mmm::Ism& i) {
                               std::vector<int> out;
                               for (const auto& c : i.cols()) out.push_back(c.id.number);
                               return out;
                             })
      .def("mark",
           [](const mmm::Ism& i, const std::string& activity, int iface) -> std::optional<std::string> {
             auto mark = i.mark(mmm::ActivityId(activity), mmm::InterfaceId{iface});
             if (!mark) return std::nullopt;
             return std::string(1, static_cast<char>(*mark));
           },
           py::arg("activity"), py::arg("interface"))
      .def("to_csv", &mmm::ism_to_csv);

  py::class_<mmm::SubProcess>(m, "SubProcess")
      .def_readonly("id", &mmm::SubProcess::id)
      .def_property_readonly("activities", [](const mmm::SubProcess& s) { return labels(s.activities); })
      .def_property_readonly("interfaces", [](const mmm::SubProcess& s) {
        std::vector<int> out;
        for (const auto& i : s.interfaces) out.push_back(i.number);
        return out;
      });

  py::class_<mmm::Clustering>(m, "Clustering")
      .def_readonly("subprocesses", &mmm::Clustering::subprocesses)
      .def_property_readonly("isolated", [](const mmm::Clustering& c) { return labels(c.isolated); });

  py::class_<mmm::InterdependentPair>(m, "InterdependentPair")
      .def_property_readonly("pair",
                             [](const mmm::InterdependentPair& p) { return std::pair{p.first.str(), p.second.str()}; })
      .def_property_readonly("via", [](const mmm::InterdependentPair& p) { return std::pair{p.p.number, p.q.number}; });

  py::class_<mmm::Analysis>(m, "Analysis")
      .def_readonly("model", &mmm::Analysis::model)
      .def_readonly("dsm", &mmm::Analysis::dsm)
      .def_readonly("sorted_dsm", &mmm::Analysis::sorted_dsm)
      .def_readonly("triangulation", &mmm::Analysis::triangulation)
      .def_property_readonly("levels", [](const mmm::Analysis& a) { return level_map(a.levels); })
      .def_readonly("ism", &mmm::Analysis::ism)
      .def_readonly("reduced_ism", &mmm::Analysis::reduced_ism)
      .def_readonly("clustering", &mmm::Analysis::clustering)
      .def_readonly("interdependent", &mmm::Analysis::interdependent)
      .def("exports", [](const mmm::Analysis& a) {
        return std::map<std::string, std::string>{
            {"dsm.csv", mmm::dsm_to_csv(a.dsm)},
            {"ism.csv", mmm::ism_to_csv(a.ism)},
            {"levels.json", mmm::levels_to_json(a.levels, a.triangulation)},
            {"clusters.json", mmm::clusters_to_json(a.clustering, a.interdependent)},
            {"mmm.md", mmm::mmm_to_markdown(a.mmm)},
            {"mmm.json", mmm::mmm_to_json(a.mmm)},
            {"graph.dot", mmm::export_dot(a.model, a.triangulation, a.clustering)},
        };
      });

  m.def("case_study_fixture", &mmm::case_study_fixture);
  m.def("parse_model", [](const std::string& text) { return mmm::parse_model(text); }, py::arg("text"));
  m.def("serialize_model", &mmm::serialize_model, py::arg("model"));
  m.def(
      "validate_model",
      [](const mmm::ProcessModel& model) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : mmm::validate_model(model)) out.emplace_back(v.code, v.message);
        return out;
      },
      py::arg("model"));
  m.def(
      "build_dsm",
      [](const mmm::ProcessModel& model, std::optional<std::vector<std::string>> ordering) {
        return ordering ? mmm::build_dsm(model, ids(*ordering)) : mmm::build_dsm(model);
      },
      py::arg("model"), py::arg("ordering") = py::none());
  m.def("feedback_entries", &mmm::feedback_entries, py::arg("dsm"));
  m.def("classify_feedback", &mmm::classify_feedback, py::arg("dsm"));
  m.def(
      "find_original_activities",
      [](const mmm::Dsm& d) { return labels(mmm::find_original_activities(d)); }, py::arg("dsm"));
  m.def(
      "find_destination_activities",
      [](const mmm::Dsm& d) { return labels(mmm::find_destination_activities(d)); }, py::arg("dsm"));
  m.def("triangulate", &mmm::triangulate, py::arg("dsm"));
  m.def(
      "assign_levels",
      [](const mmm::TriangulationResult& t, const mmm::Dsm& d) { return level_map(mmm::assign_levels(t, d)); },
      py::arg("result"), py::arg("dsm"));
  m.def("build_ism", &mmm::build_ism, py::arg("model"));
  m.def("reduce_ism", &mmm::reduce_ism, py::arg("ism"));
  m.def("cluster_reduced_ism", &mmm::cluster_reduced_ism, py::arg("ism"));
  m.def("detect_interdependencies", &mmm::detect_interdependencies, py::arg("ism"));
  m.def("analyze", &mmm::analyze, py::arg("model"));
}
