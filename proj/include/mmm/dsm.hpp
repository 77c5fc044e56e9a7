#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmm/model.hpp"

namespace mmm {

/// Binary activity-based DSM in IR/FAD form: inputs index rows, outputs index
/// columns, so a mark at (row i, col j) means the activity at i consumes the
/// output of the activity at j. Backward flows land above the diagonal.
class Dsm {
 public:
  Dsm() = default;

  /// Grid over `ordering` with the given (consumer, producer) marks.
  Dsm(std::vector<ActivityId> ordering,
      const std::vector<std::pair<ActivityId, ActivityId>>& consumer_producer);

  std::size_t size() const noexcept { return ordering_.size(); }
  const std::vector<ActivityId>& ordering() const noexcept { return ordering_; }
  const ActivityId& at(std::size_t position) const { return ordering_.at(position); }

  bool marked(std::size_t row, std::size_t col) const { return cells_[row * size() + col] != 0; }
  std::optional<std::size_t> position_of(const ActivityId& a) const;

  /// Total number of off-diagonal marks.
  std::size_t mark_count() const;

  /// Every marked (producer -> consumer) flow, row-major.
  std::vector<std::pair<ActivityId, ActivityId>> flows() const;

  friend bool operator==(const Dsm&, const Dsm&) = default;

 private:
  std::vector<ActivityId> ordering_;
  std::vector<unsigned char> cells_;
};

enum class FeedbackClass { Unset, Iteration, Cycle };

std::string_view to_string(FeedbackClass c);

/// A mark strictly above the diagonal: `source` (column) feeds `target` (row)
/// although it sits later in the ordering.
struct FeedbackEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  ActivityId source;
  ActivityId target;
  FeedbackClass cls = FeedbackClass::Unset;

  friend bool operator==(const FeedbackEntry&, const FeedbackEntry&) = default;
};

/// Largest column-minus-row distance still classified as an iteration:
/// adjacent to the diagonal, or one empty cell away.
inline constexpr std::size_t kIterationReach = 2;

/// Builds the DSM of the model's input/output flows over `ordering`. Control
/// and boundary dependencies are ignored. Throws Error `bad-ordering` when
/// `ordering` is not a permutation of the model's activities.
Dsm build_dsm(const ProcessModel& model, const std::vector<ActivityId>& ordering);

/// build_dsm over the model's declared activity order.
Dsm build_dsm(const ProcessModel& model);

/// Above-diagonal marks in row-major order, class unset.
std::vector<FeedbackEntry> feedback_entries(const Dsm& dsm);

/// feedback_entries with each entry classified by its distance to the
/// diagonal. Meaningful on a triangulated ordering.
std::vector<FeedbackEntry> classify_feedback(const Dsm& dsm);

FeedbackClass classify_distance(std::size_t distance);

/// CSV grid: header row of labels, the activity label on the diagonal, `x`
/// for a mark, empty otherwise.
std::string dsm_to_csv(const Dsm& dsm);

}  // namespace mmm
