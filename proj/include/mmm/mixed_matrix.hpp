#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmm/cda.hpp"
#include "mmm/dsm.hpp"
#include "mmm/model.hpp"
#include "mmm/triangulation.hpp"

namespace mmm {

struct ActivityRecord {
  ActivityId activity;
  int level = 0;
  std::optional<std::string> subprocess;  ///< none for isolated activities

  friend bool operator==(const ActivityRecord&, const ActivityRecord&) = default;
};

/// An io flow whose producer sits after its consumer in the triangulated
/// ordering.
struct FeedbackLoop {
  ActivityId source;
  ActivityId target;
  InterfaceId via;
  FeedbackClass cls = FeedbackClass::Unset;
  int level_distance = 0;

  friend bool operator==(const FeedbackLoop&, const FeedbackLoop&) = default;
};

/// Delay-risk summary of the feedback region.
struct FeedbackSpace {
  int entry_count = 0;
  int max_level_distance = 0;
  int total_level_distance = 0;

  friend bool operator==(const FeedbackSpace&, const FeedbackSpace&) = default;
};

struct MixedMatrixModel {
  std::string name;
  std::vector<ActivityRecord> records;  ///< triangulated order
  std::vector<Block> blocks;
  std::vector<CycleGroup> cycles;
  std::vector<FeedbackLoop> feedback;  ///< row-major in the triangulated DSM
  FeedbackSpace metrics;
  int level_count = 0;

  friend bool operator==(const MixedMatrixModel&, const MixedMatrixModel&) = default;
};

/// Joins levels and sub-processes per activity and lists the backward flows
/// of the triangulated ordering with their class and level distance.
/// Throws Error `inconsistent-inputs` if an activity is missing from any input.
MixedMatrixModel assemble_mmm(const ProcessModel& model, const LevelAssignment& levels,
                              const Clustering& clustering, const TriangulationResult& tri);

FeedbackSpace feedback_metrics(const MixedMatrixModel& mmm);

std::string mmm_to_json(const MixedMatrixModel& mmm);

/// Level-by-sub-process grid with cycles bracketed, then the feedback table
/// and the feedback-space summary.
std::string mmm_to_markdown(const MixedMatrixModel& mmm);

}  // namespace mmm
