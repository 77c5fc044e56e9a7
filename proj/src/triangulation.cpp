#include "mmm/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <utility>

#include "json.hpp"
#include "mmm/error.hpp"

namespace mmm {

namespace {

std::string cycle_label(const std::vector<ActivityId>& sorted_members) {
  std::string out = "(";
  for (std::size_t i = 0; i < sorted_members.size(); ++i) {
    out += (i ? "," : "") + sorted_members[i].str();
  }
  return out + ")";
}

// Working copy of the incidence matrix in condensed form. Node ids index
// `nodes`; `order` lists the nodes not yet underlined, in current order.
class WorkingMatrix {
 public:
  explicit WorkingMatrix(const Dsm& dsm) : preds_(dsm.size()), succs_(dsm.size()) {
    for (std::size_t i = 0; i < dsm.size(); ++i) {
      nodes_.push_back({dsm.at(i).str(), {dsm.at(i)}});
      order_.push_back(i);
    }
    for (std::size_t r = 0; r < dsm.size(); ++r) {
      for (std::size_t c = 0; c < dsm.size(); ++c) {
        if (dsm.marked(r, c)) {
          preds_[r].insert(c);
          succs_[c].insert(r);
        }
      }
    }
  }

  bool empty() const { return order_.empty(); }
  const Block& node(std::size_t id) const { return nodes_[id]; }

  std::optional<std::size_t> first_original() const {
    for (auto n : order_) {
      if (preds_[n].empty()) return n;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> first_destination() const {
    for (auto n : order_) {
      if (succs_[n].empty()) return n;
    }
    return std::nullopt;
  }

  void remove(std::size_t n) {
    remove_edges(n);
    std::erase(order_, n);
  }

  /// Members (node ids, current order) of the first nontrivial strongly
  /// connected component, ranked by its earliest node.
  std::vector<std::size_t> first_cycle() const {
    const auto comp = components();
    std::vector<std::size_t> size(nodes_.size(), 0);
    for (auto n : order_) ++size[comp[n]];
    for (auto n : order_) {
      if (size[comp[n]] >= 2) {
        std::vector<std::size_t> members;
        for (auto m : order_) {
          if (comp[m] == comp[n]) members.push_back(m);
        }
        return members;
      }
    }
    return {};
  }

  /// Replaces `members` by one node at the position of the first member and
  /// ORs their rows and columns together. Returns the new node id.
  std::size_t merge(const std::vector<std::size_t>& members) {
    const std::set<std::size_t> inside(members.begin(), members.end());
    Block merged;
    std::set<std::size_t> preds;
    std::set<std::size_t> succs;
    for (auto m : members) {
      merged.members.insert(merged.members.end(), nodes_[m].members.begin(), nodes_[m].members.end());
      for (auto p : preds_[m]) {
        if (!inside.contains(p)) preds.insert(p);
      }
      for (auto s : succs_[m]) {
        if (!inside.contains(s)) succs.insert(s);
      }
    }
    auto sorted = merged.members;
    std::ranges::sort(sorted);
    merged.label = cycle_label(sorted);

    const auto id = nodes_.size();
    nodes_.push_back(std::move(merged));
    preds_.emplace_back();
    succs_.emplace_back();
    for (auto m : members) remove_edges(m);
    for (auto p : preds) {
      succs_[p].insert(id);
      preds_[id].insert(p);
    }
    for (auto s : succs) {
      preds_[s].insert(id);
      succs_[id].insert(s);
    }
    auto at = std::ranges::find(order_, members.front());
    *at = id;
    std::erase_if(order_, [&](std::size_t n) { return inside.contains(n); });
    return id;
  }

 private:
  void remove_edges(std::size_t n) {
    for (auto p : preds_[n]) succs_[p].erase(n);
    for (auto s : succs_[n]) preds_[s].erase(n);
    preds_[n].clear();
    succs_[n].clear();
  }

  // Tarjan's algorithm, iterative, over the remaining nodes.
  std::vector<std::size_t> components() const {
    constexpr auto unvisited = static_cast<std::size_t>(-1);
    const auto n = nodes_.size();
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0;
    std::size_t comp_count = 0;

    struct Frame {
      std::size_t node;
      std::set<std::size_t>::const_iterator next;
    };
    for (auto root : order_) {
      if (index[root] != unvisited) continue;
      std::vector<Frame> frames{{root, succs_[root].begin()}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        auto& f = frames.back();
        if (f.next != succs_[f.node].end()) {
          const auto w = *f.next++;
          if (index[w] == unvisited) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            frames.push_back({w, succs_[w].begin()});
          } else if (on_stack[w]) {
            low[f.node] = std::min(low[f.node], index[w]);
          }
          continue;
        }
        const auto v = f.node;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
        if (low[v] == index[v]) {
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_count;
          } while (w != v);
          ++comp_count;
        }
      }
    }
    return comp;
  }

  std::vector<Block> nodes_;
  std::vector<std::set<std::size_t>> preds_;
  std::vector<std::set<std::size_t>> succs_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::string_view to_string(StepAction action) {
  switch (action) {
    case StepAction::Origin:
      return "origin";
    case StepAction::Destination:
      return "destination";
    case StepAction::MergeCycle:
      return "merge-cycle";
  }
  return "?";
}

std::vector<ActivityId> LevelAssignment::at_level(int lvl) const {
  std::vector<ActivityId> out;
  for (const auto& [a, l] : level) {
    if (l == lvl) out.push_back(a);
  }
  return out;
}

std::set<ActivityId> find_original_activities(const Dsm& dsm) {
  std::set<ActivityId> out;
  for (std::size_t r = 0; r < dsm.size(); ++r) {
    bool any = false;
    for (std::size_t c = 0; c < dsm.size() && !any; ++c) any = dsm.marked(r, c);
    if (!any) out.insert(dsm.at(r));
  }
  return out;
}

std::set<ActivityId> find_destination_activities(const Dsm& dsm) {
  std::set<ActivityId> out;
  for (std::size_t c = 0; c < dsm.size(); ++c) {
    bool any = false;
    for (std::size_t r = 0; r < dsm.size() && !any; ++r) any = dsm.marked(r, c);
    if (!any) out.insert(dsm.at(c));
  }
  return out;
}

TriangulationResult triangulate(const Dsm& dsm) {
  WorkingMatrix work(dsm);
  TriangulationResult result;
  std::vector<Block> left;
  std::deque<Block> right;

  while (!work.empty()) {
    if (auto oa = work.first_original()) {
      left.push_back(work.node(*oa));
      result.steps.push_back({StepAction::Origin, left.back().label});
      work.remove(*oa);
    } else if (auto da = work.first_destination()) {
      right.push_front(work.node(*da));
      result.steps.push_back({StepAction::Destination, right.front().label});
      work.remove(*da);
    } else {
      const auto id = work.merge(work.first_cycle());
      const auto& merged = work.node(id);
      auto members = merged.members;
      std::ranges::sort(members);
      result.cycles.push_back({std::move(members), merged.label});
      result.steps.push_back({StepAction::MergeCycle, merged.label});
    }
  }

  result.blocks = std::move(left);
  result.blocks.insert(result.blocks.end(), right.begin(), right.end());
  for (const auto& b : result.blocks) {
    result.ordering.insert(result.ordering.end(), b.members.begin(), b.members.end());
  }
  return result;
}

LevelAssignment assign_levels(const TriangulationResult& result, const Dsm& dsm) {
  std::map<ActivityId, std::size_t> block_of;
  for (std::size_t b = 0; b < result.blocks.size(); ++b) {
    for (const auto& a : result.blocks[b].members) block_of[a] = b;
  }
  if (block_of.size() != dsm.size()) {
    throw Error("inconsistent-inputs", "triangulation result does not cover the DSM's activities");
  }

  std::vector<std::vector<std::size_t>> preds(result.blocks.size());
  for (const auto& [producer, consumer] : dsm.flows()) {
    auto p = block_of.find(producer);
    auto c = block_of.find(consumer);
    if (p == block_of.end() || c == block_of.end()) {
      throw Error("inconsistent-inputs", "DSM activity missing from the triangulation result");
    }
    if (p->second == c->second) continue;
    if (p->second > c->second) {
      throw Error("inconsistent-inputs",
                  "flow " + producer.str() + "->" + consumer.str() + " runs backward across blocks");
    }
    preds[c->second].push_back(p->second);
  }

  std::vector<int> block_level(result.blocks.size(), 1);
  LevelAssignment out;
  for (std::size_t b = 0; b < result.blocks.size(); ++b) {
    for (auto p : preds[b]) block_level[b] = std::max(block_level[b], block_level[p] + 1);
    for (const auto& a : result.blocks[b].members) out.level[a] = block_level[b];
    out.level_count = std::max(out.level_count, block_level[b]);
  }
  return out;
}

std::string levels_to_json(const LevelAssignment& levels, const TriangulationResult& result) {
  nlohmann::json doc;
  doc["levels"] = nlohmann::json::object();
  for (const auto& [a, l] : levels.level) doc["levels"][a.str()] = l;
  doc["cycles"] = nlohmann::json::array();
  for (const auto& c : result.cycles) {
    auto members = nlohmann::json::array();
    for (const auto& a : c.members) members.push_back(a.str());
    doc["cycles"].push_back(std::move(members));
  }
  return doc.dump(2) + "\n";
}

}  // namespace mmm
