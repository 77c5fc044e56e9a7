#include "mmm/mixed_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "mmm/error.hpp"

namespace mmm {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error("inconsistent-inputs", what);
}

}  // namespace

MixedMatrixModel assemble_mmm(const ProcessModel& model, const LevelAssignment& levels,
                              const Clustering& clustering, const TriangulationResult& tri) {
  const std::set<ActivityId> declared(model.activities.begin(), model.activities.end());
  if (std::set<ActivityId>(tri.ordering.begin(), tri.ordering.end()) != declared ||
      tri.ordering.size() != declared.size()) {
    inconsistent("triangulated ordering is not a permutation of the model's activities");
  }

  std::map<ActivityId, std::optional<std::string>> subprocess_of;
  for (const auto& sp : clustering.subprocesses) {
    for (const auto& a : sp.activities) subprocess_of[a] = sp.id;
  }
  for (const auto& a : clustering.isolated) subprocess_of[a] = std::nullopt;

  MixedMatrixModel out;
  out.name = model.name;
  out.blocks = tri.blocks;
  out.cycles = tri.cycles;
  out.level_count = levels.level_count;

  std::map<ActivityId, std::size_t> position;
  for (const auto& a : tri.ordering) {
    auto lvl = levels.level.find(a);
    if (lvl == levels.level.end()) inconsistent("activity '" + a.str() + "' has no level");
    auto sp = subprocess_of.find(a);
    if (sp == subprocess_of.end()) {
      inconsistent("activity '" + a.str() + "' is in no sub-process and not isolated");
    }
    position.emplace(a, out.records.size());
    out.records.push_back({a, lvl->second, sp->second});
  }
  if (levels.level.size() != declared.size() || subprocess_of.size() != declared.size()) {
    inconsistent("levels or sub-processes mention activities outside the model");
  }

  std::vector<std::tuple<std::size_t, std::size_t, FeedbackLoop>> backward;
  for (const auto& d : model.dependencies) {
    if (!d.is_internal_flow()) continue;
    const auto src = position.at(*d.source);
    const auto tgt = position.at(*d.target);
    if (src <= tgt) continue;
    const int distance = std::abs(levels.level.at(*d.source) - levels.level.at(*d.target));
    backward.emplace_back(tgt, src,
                          FeedbackLoop{*d.source, *d.target, d.id, classify_distance(src - tgt), distance});
  }
  std::ranges::sort(backward, [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  for (auto& b : backward) out.feedback.push_back(std::move(std::get<2>(b)));
  out.metrics = feedback_metrics(out);
  return out;
}

FeedbackSpace feedback_metrics(const MixedMatrixModel& mmm) {
  FeedbackSpace space;
  for (const auto& f : mmm.feedback) {
    ++space.entry_count;
    space.max_level_distance = std::max(space.max_level_distance, f.level_distance);
    space.total_level_distance += f.level_distance;
  }
  return space;
}

std::string mmm_to_json(const MixedMatrixModel& mmm) {
  using nlohmann::json;
  json doc;
  doc["name"] = mmm.name;
  doc["level_count"] = mmm.level_count;
  doc["activities"] = json::array();
  for (const auto& r : mmm.records) {
    doc["activities"].push_back({{"activity", r.activity.str()},
                                 {"level", r.level},
                                 {"subprocess", r.subprocess ? json(*r.subprocess) : json(nullptr)}});
  }
  doc["cycles"] = json::array();
  for (const auto& c : mmm.cycles) {
    json members = json::array();
    for (const auto& a : c.members) members.push_back(a.str());
    doc["cycles"].push_back(std::move(members));
  }
  doc["feedback"] = json::array();
  for (const auto& f : mmm.feedback) {
    doc["feedback"].push_back({{"source", f.source.str()},
                               {"target", f.target.str()},
                               {"interface", f.via.number},
                               {"class", std::string(to_string(f.cls))},
                               {"level_distance", f.level_distance}});
  }
  doc["metrics"] = {{"entry_count", mmm.metrics.entry_count},
                    {"max_level_distance", mmm.metrics.max_level_distance},
                    {"total_level_distance", mmm.metrics.total_level_distance}};
  return doc.dump(2) + "\n";
}

std::string mmm_to_markdown(const MixedMatrixModel& mmm) {
  std::map<ActivityId, const ActivityRecord*> record;
  std::vector<std::optional<std::string>> rows;
  for (const auto& r : mmm.records) {
    record[r.activity] = &r;
    if (r.subprocess && std::ranges::find(rows, r.subprocess) == rows.end()) rows.push_back(r.subprocess);
  }
  std::ranges::sort(rows, [](const auto& a, const auto& b) {
    // S2 before S10
    return std::pair{a->size(), *a} < std::pair{b->size(), *b};
  });
  if (std::ranges::any_of(mmm.records, [](const auto& r) { return !r.subprocess; })) {
    rows.push_back(std::nullopt);
  }

  std::ostringstream out;
  out << "# Mixed Matrix Model: " << mmm.name << "\n\n";
  out << "| Sub-process |";
  for (int l = 1; l <= mmm.level_count; ++l) out << " Level " << l << " |";
  out << "\n|---|";
  for (int l = 1; l <= mmm.level_count; ++l) out << "---|";
  out << '\n';
  for (const auto& sp : rows) {
    out << "| " << (sp ? *sp : std::string("(isolated)")) << " |";
    for (int l = 1; l <= mmm.level_count; ++l) {
      std::string cell;
      for (const auto& b : mmm.blocks) {
        const auto* r = record.at(b.members.front());
        if (r->level != l || r->subprocess != sp) continue;
        std::string text;
        for (const auto& a : b.members) text += (text.empty() ? "" : " ") + a.str();
        if (b.members.size() > 1) text = "[" + text + "]";
        cell += (cell.empty() ? "" : " ") + text;
      }
      out << ' ' << cell << (cell.empty() ? "|" : " |");
    }
    out << '\n';
  }

  out << "\nCycles:";
  if (mmm.cycles.empty()) out << " none";
  for (std::size_t i = 0; i < mmm.cycles.size(); ++i) out << (i ? ", " : " ") << mmm.cycles[i].label;
  out << "\n\n## Feedback\n\n";
  if (mmm.feedback.empty()) {
    out << "No feedback entries.\n";
  } else {
    out << "| Source | Target | Interface | Class | Level distance |\n|---|---|---|---|---|\n";
    for (const auto& f : mmm.feedback) {
      out << "| " << f.source.str() << " | " << f.target.str() << " | " << f.via.number << " | "
          << to_string(f.cls) << " | " << f.level_distance << " |\n";
    }
  }
  out << "\n## Feedback space\n\n"
      << "- Entries: " << mmm.metrics.entry_count << '\n'
      << "- Max level distance: " << mmm.metrics.max_level_distance << '\n'
      << "- Total level distance: " << mmm.metrics.total_level_distance << '\n';
  return out.str();
}

}  // namespace mmm
