#include "mmm/dsm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mmm/error.hpp"

namespace mmm {

Dsm::Dsm(std::vector<ActivityId> ordering,
         const std::vector<std::pair<ActivityId, ActivityId>>& consumer_producer)
    : ordering_(std::move(ordering)), cells_(ordering_.size() * ordering_.size(), 0) {
  std::map<ActivityId, std::size_t> index;
  for (std::size_t i = 0; i < ordering_.size(); ++i) {
    if (!index.emplace(ordering_[i], i).second) {
      throw Error("bad-ordering", "activity '" + ordering_[i].str() + "' appears twice in the ordering");
    }
  }
  for (const auto& [consumer, producer] : consumer_producer) {
    auto r = index.find(consumer);
    auto c = index.find(producer);
    if (r == index.end() || c == index.end()) {
      throw Error("bad-ordering", "flow " + producer.str() + "->" + consumer.str() +
                                      " refers to an activity outside the ordering");
    }
    if (r->second != c->second) cells_[r->second * size() + c->second] = 1;
  }
}

std::optional<std::size_t> Dsm::position_of(const ActivityId& a) const {
  auto it = std::ranges::find(ordering_, a);
  if (it == ordering_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ordering_.begin());
}

std::size_t Dsm::mark_count() const {
  return static_cast<std::size_t>(std::ranges::count(cells_, 1));
}

std::vector<std::pair<ActivityId, ActivityId>> Dsm::flows() const {
  std::vector<std::pair<ActivityId, ActivityId>> out;
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < size(); ++c) {
      if (marked(r, c)) out.emplace_back(ordering_[c], ordering_[r]);
    }
  }
  return out;
}

std::string_view to_string(FeedbackClass c) {
  switch (c) {
    case FeedbackClass::Iteration:
      return "iteration";
    case FeedbackClass::Cycle:
      return "cycle";
    case FeedbackClass::Unset:
      break;
  }
  return "unset";
}

Dsm build_dsm(const ProcessModel& model, const std::vector<ActivityId>& ordering) {
  auto sorted_ordering = ordering;
  auto sorted_activities = model.activities;
  std::ranges::sort(sorted_ordering);
  std::ranges::sort(sorted_activities);
  if (sorted_ordering != sorted_activities) {
    throw Error("bad-ordering", "ordering is not a permutation of the model's activities");
  }
  std::vector<std::pair<ActivityId, ActivityId>> marks;
  for (const auto& d : model.dependencies) {
    if (d.is_internal_flow()) marks.emplace_back(*d.target, *d.source);
  }
  return Dsm(ordering, marks);
}

Dsm build_dsm(const ProcessModel& model) { return build_dsm(model, model.activities); }

std::vector<FeedbackEntry> feedback_entries(const Dsm& dsm) {
  std::vector<FeedbackEntry> out;
  for (std::size_t r = 0; r < dsm.size(); ++r) {
    for (std::size_t c = r + 1; c < dsm.size(); ++c) {
      if (dsm.marked(r, c)) out.push_back({r, c, dsm.at(c), dsm.at(r), FeedbackClass::Unset});
    }
  }
  return out;
}

FeedbackClass classify_distance(std::size_t distance) {
  return distance <= kIterationReach ? FeedbackClass::Iteration : FeedbackClass::Cycle;
}

std::vector<FeedbackEntry> classify_feedback(const Dsm& dsm) {
  auto entries = feedback_entries(dsm);
  for (auto& e : entries) e.cls = classify_distance(e.col - e.row);
  return entries;
}

std::string dsm_to_csv(const Dsm& dsm) {
  std::ostringstream out;
  for (const auto& a : dsm.ordering()) out << ',' << a.str();
  out << '\n';
  for (std::size_t r = 0; r < dsm.size(); ++r) {
    out << dsm.at(r).str();
    for (std::size_t c = 0; c < dsm.size(); ++c) {
      out << ',';
      if (r == c) {
        out << dsm.at(r).str();
      } else if (dsm.marked(r, c)) {
        out << 'x';
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mmm
