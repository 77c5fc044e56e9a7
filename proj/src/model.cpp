#include "mmm/model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace mmm {

ActivityId::ActivityId(std::string_view label) : label_(label) {
  std::ranges::transform(label_, label_.begin(),
                         [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
}

std::string_view to_string(DependencyKind kind) {
  return kind == DependencyKind::InputOutput ? "io" : "control";
}

bool is_valid_label(std::string_view label) {
  return !label.empty() && std::ranges::all_of(label, [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '.' || c == '-';
  });
}

std::vector<Violation> validate_model(const ProcessModel& model) {
  std::vector<Violation> out;
  auto report = [&](std::string code, std::string message, std::optional<std::size_t> activity,
                    std::optional<std::size_t> dependency) {
    out.push_back({std::move(code), std::move(message), activity, dependency});
  };

  std::set<ActivityId> declared;
  for (std::size_t i = 0; i < model.activities.size(); ++i) {
    const auto& a = model.activities[i];
    if (!is_valid_label(a.str())) {
      report("bad-label", "activity label '" + a.str() + "' must match [A-Za-z0-9_.-]+", i, {});
    }
    if (!declared.insert(a).second) {
      report("duplicate-activity", "activity '" + a.str() + "' is declared more than once", i, {});
    }
  }

  std::set<InterfaceId> ids;
  std::set<std::pair<ActivityId, ActivityId>> flows;
  for (std::size_t i = 0; i < model.dependencies.size(); ++i) {
    const auto& d = model.dependencies[i];
    const auto tag = "interface " + std::to_string(d.id.number);
    if (d.id.number <= 0) {
      report("bad-interface-id", tag + ": interface ids must be positive", {}, i);
    } else if (!ids.insert(d.id).second) {
      report("duplicate-interface", tag + " is declared more than once", {}, i);
    }
    if (!d.source && !d.target) {
      report("no-endpoint", tag + " has neither source nor target", {}, i);
    }
    for (const auto* end : {&d.source, &d.target}) {
      if (*end && !declared.contains(**end)) {
        report("unknown-endpoint", tag + " refers to undeclared activity '" + (*end)->str() + "'",
               {}, i);
      }
    }
    if (d.source && d.target && *d.source == *d.target) {
      report("self-loop", tag + " connects activity '" + d.source->str() + "' to itself", {}, i);
    }
    if (d.kind == DependencyKind::Control && !d.target) {
      report("control-without-target", tag + ": a control dependency needs a target", {}, i);
    }
    if (d.is_internal_flow() && *d.source != *d.target &&
        !flows.emplace(*d.source, *d.target).second) {
      report("duplicate-edge",
             tag + " repeats the io flow " + d.source->str() + "->" + d.target->str(), {}, i);
    }
  }
  return out;
}

ProcessModel case_study_fixture() {
  using K = DependencyKind;
  auto act = [](const char* s) { return std::optional<ActivityId>(ActivityId(s)); };
  const std::optional<ActivityId> none;

  ProcessModel m;
  m.name = "case-study";
  for (char c = 'A'; c <= 'N'; ++c) m.activities.emplace_back(std::string(1, c));

  m.dependencies = {
      {{1}, act("A"), act("B"), K::InputOutput},
      {{2}, act("B"), act("C"), K::InputOutput},
      {{3}, none, act("D"), K::Control},
      {{4}, act("C"), act("D"), K::InputOutput},
      {{5}, act("D"), act("E"), K::InputOutput},
      {{6}, act("E"), act("F"), K::InputOutput},
      {{7}, none, act("H"), K::Control},
      {{8}, act("F"), act("D"), K::InputOutput},
      {{9}, act("F"), act("H"), K::InputOutput},
      {{10}, act("G"), act("I"), K::InputOutput},
      {{11}, act("J"), act("L"), K::InputOutput},
      {{12}, act("H"), none, K::InputOutput},
      {{13}, act("I"), act("K"), K::InputOutput},
      {{14}, act("L"), act("N"), K::InputOutput},
      {{15}, act("K"), act("I"), K::InputOutput},
      {{16}, act("M"), act("N"), K::InputOutput},
      {{17}, none, act("K"), K::Control},
      {{18}, act("J"), act("H"), K::InputOutput},
  };
  return m;
}

}  // namespace mmm
