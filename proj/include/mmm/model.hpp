#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmm {

/// Activity label. Case-insensitive: stored uppercase so "h" and "H" are the
/// same activity.
class ActivityId {
 public:
  ActivityId() = default;
  explicit ActivityId(std::string_view label);

  const std::string& str() const noexcept { return label_; }

  friend auto operator<=>(const ActivityId&, const ActivityId&) = default;

 private:
  std::string label_;
};

/// Interface (arrow) number. Positive and never renumbered.
struct InterfaceId {
  int number = 0;

  friend auto operator<=>(const InterfaceId&, const InterfaceId&) = default;
};

enum class DependencyKind { InputOutput, Control };

std::string_view to_string(DependencyKind kind);

/// One numbered arrow of the process model. An absent endpoint lies outside
/// the model boundary.
struct Dependency {
  InterfaceId id;
  std::optional<ActivityId> source;
  std::optional<ActivityId> target;
  DependencyKind kind = DependencyKind::InputOutput;

  /// True for an input/output arrow between two declared activities.
  bool is_internal_flow() const noexcept {
    return kind == DependencyKind::InputOutput && source && target;
  }

  friend bool operator==(const Dependency&, const Dependency&) = default;
};

struct ProcessModel {
  std::string name;
  std::vector<ActivityId> activities;
  std::vector<Dependency> dependencies;

  friend bool operator==(const ProcessModel&, const ProcessModel&) = default;
};

/// A broken model invariant. The indices point at the offending entry so
/// callers holding source positions can attach them.
struct Violation {
  std::string code;
  std::string message;
  std::optional<std::size_t> activity_index;
  std::optional<std::size_t> dependency_index;
};

/// Lists every invariant violation of `model`; an empty result means valid.
///
/// Codes: `bad-label`, `duplicate-activity`, `bad-interface-id`,
/// `duplicate-interface`, `no-endpoint`, `unknown-endpoint`, `self-loop`,
/// `control-without-target`, `duplicate-edge`.
std::vector<Violation> validate_model(const ProcessModel& model);

/// True when `label` is a legal activity label: one or more of [A-Za-z0-9_.-].
bool is_valid_label(std::string_view label);

/// The 14-activity (A..N), 18-interface worked example.
ProcessModel case_study_fixture();

}  // namespace mmm
