#include "mmm/cda.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "json.hpp"
#include "mmm/error.hpp"

namespace mmm {

Clustering cluster_reduced_ism(const Ism& ism) {
  if (ism.has_control_columns()) {
    throw Error("control-column-present", "clustering needs a reduced ISM (no control columns)");
  }
  const auto n_rows = ism.rows().size();
  const auto n_cols = ism.cols().size();
  std::vector<std::vector<std::size_t>> row_marks(n_rows), col_marks(n_cols);
  for (const auto& [pos, mark] : ism.cells()) {
    row_marks[pos.first].push_back(pos.second);
    col_marks[pos.second].push_back(pos.first);
  }

  Clustering out;
  std::vector<bool> row_struck(n_rows, false), col_struck(n_cols, false);
  for (std::size_t seed = 0; seed < n_rows; ++seed) {
    if (row_struck[seed]) continue;
    if (row_marks[seed].empty()) {
      out.isolated.push_back(ism.rows()[seed]);
      row_struck[seed] = true;
      continue;
    }

    std::vector<std::size_t> new_rows{seed};
    row_struck[seed] = true;
    std::vector<bool> in_rows(n_rows, false), in_cols(n_cols, false);
    in_rows[seed] = true;
    while (!new_rows.empty()) {
      std::vector<std::size_t> new_cols;
      for (auto r : new_rows) {
        for (auto c : row_marks[r]) {
          if (!col_struck[c]) {
            col_struck[c] = in_cols[c] = true;
            new_cols.push_back(c);
          }
        }
      }
      new_rows.clear();
      for (auto c : new_cols) {
        for (auto r : col_marks[c]) {
          if (!row_struck[r]) {
            row_struck[r] = in_rows[r] = true;
            new_rows.push_back(r);
          }
        }
      }
    }

    SubProcess sp;
    sp.id = "S" + std::to_string(out.subprocesses.size() + 1);
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (in_rows[r]) sp.activities.push_back(ism.rows()[r]);
    }
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (in_cols[c]) sp.interfaces.push_back(ism.cols()[c].id);
    }
    std::ranges::sort(sp.interfaces);
    out.subprocesses.push_back(std::move(sp));
  }
  return out;
}

std::vector<InterdependentPair> detect_interdependencies(const Ism& ism) {
  // (output row, input row) -> columns carrying that flow
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> flows;
  std::vector<std::vector<std::size_t>> outputs(ism.cols().size()), inputs(ism.cols().size());
  for (const auto& [pos, mark] : ism.cells()) {
    if (mark == IsmMark::Output) outputs[pos.second].push_back(pos.first);
    if (mark == IsmMark::Input) inputs[pos.second].push_back(pos.first);
  }
  for (std::size_t c = 0; c < ism.cols().size(); ++c) {
    for (auto o : outputs[c]) {
      for (auto i : inputs[c]) {
        if (o != i) flows[{o, i}].push_back(c);
      }
    }
  }

  std::vector<std::tuple<std::size_t, InterfaceId, InterdependentPair>> found;
  for (const auto& [rows, forward] : flows) {
    const auto [k, l] = rows;
    if (k >= l) continue;
    auto back = flows.find({l, k});
    if (back == flows.end()) continue;
    for (auto a : forward) {
      for (auto b : back->second) {
        const auto ia = ism.cols()[a].id;
        const auto ib = ism.cols()[b].id;
        InterdependentPair pair{ism.rows()[k], ism.rows()[l], std::min(ia, ib), std::max(ia, ib)};
        found.emplace_back(k, pair.p, std::move(pair));
      }
    }
  }
  std::ranges::sort(found, [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x).q) <
           std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y).q);
  });
  std::vector<InterdependentPair> out;
  for (auto& f : found) out.push_back(std::move(std::get<2>(f)));
  return out;
}

std::string clusters_to_json(const Clustering& clustering,
                             const std::vector<InterdependentPair>& pairs) {
  using nlohmann::json;
  json doc;
  doc["subprocesses"] = json::array();
  for (const auto& sp : clustering.subprocesses) {
    json activities = json::array();
    json interfaces = json::array();
    for (const auto& a : sp.activities) activities.push_back(a.str());
    for (const auto& i : sp.interfaces) interfaces.push_back(i.number);
    doc["subprocesses"].push_back({{"id", sp.id}, {"activities", activities}, {"interfaces", interfaces}});
  }
  doc["interdependent"] = json::array();
  for (const auto& p : pairs) {
    doc["interdependent"].push_back(
        {{"pair", {p.first.str(), p.second.str()}}, {"via", {p.p.number, p.q.number}}});
  }
  doc["isolated"] = json::array();
  for (const auto& a : clustering.isolated) doc["isolated"].push_back(a.str());
  return doc.dump(2) + "\n";
}

}  // namespace mmm
