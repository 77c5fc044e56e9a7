#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mmm/dsm.hpp"
#include "mmm/model.hpp"

namespace mmm {

/// Activities found on one strongly connected loop and merged into a single
/// node during triangulation. Members are sorted; label is "(D,E,F)".
struct CycleGroup {
  std::vector<ActivityId> members;
  std::string label;

  friend bool operator==(const CycleGroup&, const CycleGroup&) = default;
};

/// A node of the condensed ordering: a single activity, or a merged cycle
/// whose members keep their relative input order.
struct Block {
  std::string label;
  std::vector<ActivityId> members;

  friend bool operator==(const Block&, const Block&) = default;
};

enum class StepAction { Origin, Destination, MergeCycle };

std::string_view to_string(StepAction action);

struct TriangulationStep {
  StepAction action;
  std::string subject;

  friend bool operator==(const TriangulationStep&, const TriangulationStep&) = default;
};

struct TriangulationResult {
  std::vector<ActivityId> ordering;  ///< all activities, cycles expanded
  std::vector<Block> blocks;         ///< condensed ordering
  std::vector<CycleGroup> cycles;    ///< in discovery order
  std::vector<TriangulationStep> steps;

  friend bool operator==(const TriangulationResult&, const TriangulationResult&) = default;
};

struct LevelAssignment {
  std::map<ActivityId, int> level;
  int level_count = 0;

  /// Activities on `lvl`, in label order.
  std::vector<ActivityId> at_level(int lvl) const;

  friend bool operator==(const LevelAssignment&, const LevelAssignment&) = default;
};

/// Activities whose row carries no off-diagonal mark (no predecessors).
std::set<ActivityId> find_original_activities(const Dsm& dsm);

/// Activities whose column carries no off-diagonal mark (no successors).
std::set<ActivityId> find_destination_activities(const Dsm& dsm);

/// Reorders the DSM to block lower-triangular form.
///
/// Starting from the DSM's ordering, repeatedly strips an original activity
/// to the end of the left block or, failing that, a destination activity to
/// the front of the right block. Ties go to the earliest activity in the
/// current order, and originals win over destinations. When neither exists
/// the strongly connected component holding the earliest cyclic activity is
/// merged into one node and stripping resumes.
TriangulationResult triangulate(const Dsm& dsm);

/// Longest-path levels over the condensation: a block without predecessors
/// is on level 1, any other block sits one past its deepest predecessor.
/// Cycle members share their block's level. Throws Error
/// `inconsistent-inputs` when `result` does not triangulate `dsm`.
LevelAssignment assign_levels(const TriangulationResult& result, const Dsm& dsm);

/// `{"cycles": [[...], ...], "levels": {"A": 1, ...}}`, keys sorted.
std::string levels_to_json(const LevelAssignment& levels, const TriangulationResult& result);

}  // namespace mmm
