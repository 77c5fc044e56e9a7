#include "mmm/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mmm {

Analysis analyze(ProcessModel model) {
  Analysis a;
  a.dsm = build_dsm(model);
  a.triangulation = triangulate(a.dsm);
  a.sorted_dsm = build_dsm(model, a.triangulation.ordering);
  a.levels = assign_levels(a.triangulation, a.dsm);
  a.ism = build_ism(model);
  a.reduced_ism = reduce_ism(a.ism);
  a.clustering = cluster_reduced_ism(a.reduced_ism);
  a.interdependent = detect_interdependencies(a.reduced_ism);
  a.mmm = assemble_mmm(model, a.levels, a.clustering, a.triangulation);
  a.model = std::move(model);
  return a;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const ProcessModel& model, const TriangulationResult& tri,
                       const Clustering& clustering) {
  std::map<ActivityId, std::size_t> position;
  for (std::size_t i = 0; i < tri.ordering.size(); ++i) position.emplace(tri.ordering[i], i);

  std::ostringstream out;
  out << "digraph " << quote(model.name) << " {\n";
  out << "  rankdir=LR;\n  node [shape=box];\n";
  for (const auto& sp : clustering.subprocesses) {
    out << "  subgraph " << quote("cluster_" + sp.id) << " {\n";
    out << "    label=" << quote(sp.id) << ";\n";
    for (const auto& a : sp.activities) out << "    " << quote(a.str()) << ";\n";
    out << "  }\n";
  }
  for (const auto& a : clustering.isolated) out << "  " << quote(a.str()) << ";\n";

  auto deps = model.dependencies;
  std::ranges::stable_sort(deps, {}, &Dependency::id);
  for (const auto& d : deps) {
    if (!d.is_internal_flow()) continue;
    out << "  " << quote(d.source->str()) << " -> " << quote(d.target->str()) << " [label="
        << quote(std::to_string(d.id.number));
    auto src = position.find(*d.source);
    auto tgt = position.find(*d.target);
    if (src != position.end() && tgt != position.end() && src->second > tgt->second) {
      out << ", style=dashed, color=red, constraint=false";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mmm
