#include "mmm/ism.hpp"

#include <algorithm>
#include <sstream>

namespace mmm {

Ism::Ism(std::vector<ActivityId> rows, std::vector<Column> cols,
         std::map<std::pair<std::size_t, std::size_t>, IsmMark> cells)
    : rows_(std::move(rows)), cols_(std::move(cols)), cells_(std::move(cells)) {}

std::optional<IsmMark> Ism::mark(std::size_t row, std::size_t col) const {
  auto it = cells_.find({row, col});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

std::optional<IsmMark> Ism::mark(const ActivityId& activity, InterfaceId iface) const {
  auto r = row_of(activity);
  auto c = col_of(iface);
  if (!r || !c) return std::nullopt;
  return mark(*r, *c);
}

std::optional<std::size_t> Ism::row_of(const ActivityId& a) const {
  auto it = std::ranges::find(rows_, a);
  if (it == rows_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - rows_.begin());
}

std::optional<std::size_t> Ism::col_of(InterfaceId id) const {
  auto it = std::ranges::find(cols_, id, &Column::id);
  if (it == cols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cols_.begin());
}

bool Ism::has_control_columns() const {
  return std::ranges::any_of(cols_, [](const Column& c) { return c.kind == DependencyKind::Control; });
}

Ism build_ism(const ProcessModel& model) {
  auto deps = model.dependencies;
  std::ranges::stable_sort(deps, {}, &Dependency::id);

  std::map<ActivityId, std::size_t> row;
  for (std::size_t i = 0; i < model.activities.size(); ++i) row.emplace(model.activities[i], i);

  std::vector<Ism::Column> cols;
  std::map<std::pair<std::size_t, std::size_t>, IsmMark> cells;
  for (std::size_t c = 0; c < deps.size(); ++c) {
    const auto& d = deps[c];
    cols.push_back({d.id, d.kind});
    if (d.source) cells[{row.at(*d.source), c}] = IsmMark::Output;
    if (d.target) {
      cells[{row.at(*d.target), c}] =
          d.kind == DependencyKind::Control ? IsmMark::Control : IsmMark::Input;
    }
  }
  return Ism(model.activities, std::move(cols), std::move(cells));
}

Ism reduce_ism(const Ism& ism) {
  std::vector<Ism::Column> cols;
  std::vector<std::optional<std::size_t>> remap(ism.cols().size());
  for (std::size_t c = 0; c < ism.cols().size(); ++c) {
    if (ism.cols()[c].kind == DependencyKind::Control) continue;
    remap[c] = cols.size();
    cols.push_back(ism.cols()[c]);
  }
  std::map<std::pair<std::size_t, std::size_t>, IsmMark> cells;
  for (const auto& [pos, mark] : ism.cells()) {
    if (auto c = remap[pos.second]) cells[{pos.first, *c}] = mark;
  }
  return Ism(ism.rows(), std::move(cols), std::move(cells));
}

std::string ism_to_csv(const Ism& ism) {
  std::ostringstream out;
  for (const auto& c : ism.cols()) out << ',' << c.id.number;
  out << '\n';
  for (std::size_t r = 0; r < ism.rows().size(); ++r) {
    out << ism.rows()[r].str();
    for (std::size_t c = 0; c < ism.cols().size(); ++c) {
      out << ',';
      if (auto m = ism.mark(r, c)) out << static_cast<char>(*m);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mmm
