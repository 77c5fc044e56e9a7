// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "mmm/ingest.hpp"
#include "mmm/pipeline.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "support.hpp"

namespace {

using namespace mmm;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::set<ActivityId> set_of(std::string_view letters) {
  auto v = test::ids(letters);
  return {v.begin(), v.end()};
}

Outcome fixture_dsm() {
  Outcome out;
  const auto start = Clock::now();
  const auto dsm = build_dsm(case_study_fixture());
  const auto elapsed = Clock::now() - start;
  out.require(dsm.mark_count() == 14, "expected 14 marks, got " + std::to_string(dsm.mark_count()));
  std::vector<std::pair<std::string, std::string>> above;
  for (const auto& e : feedback_entries(dsm)) above.emplace_back(e.target.str(), e.source.str());
  out.require(above == std::vector<std::pair<std::string, std::string>>{{"D", "F"}, {"H", "J"}, {"I", "K"}},
              "above-diagonal set differs");
  // Every mark of the published grid, row <- column.
  const std::vector<std::pair<char, char>> grid = {{'B', 'A'}, {'C', 'B'}, {'D', 'C'}, {'D', 'F'}, {'E', 'D'},
                                                   {'F', 'E'}, {'H', 'F'}, {'H', 'J'}, {'I', 'G'}, {'I', 'K'},
                                                   {'K', 'I'}, {'L', 'J'}, {'N', 'L'}, {'N', 'M'}};
  for (auto [r, c] : grid) {
    out.require(dsm.marked(*dsm.position_of(ActivityId(std::string(1, r))),
                           *dsm.position_of(ActivityId(std::string(1, c)))),
                std::string("missing mark ") + r + "," + c);
  }
  out.require(elapsed < std::chrono::seconds(1), "took longer than 1 s");
  return out;
}

Outcome oa_da() {
  Outcome out;
  const auto dsm = build_dsm(case_study_fixture());
  out.require(find_original_activities(dsm) == set_of("AGJM"), "sources differ from {A,G,J,M}");
  out.require(find_destination_activities(dsm) == set_of("HN"), "sinks differ from {H,N}");
  return out;
}

Outcome cycles() {
  Outcome out;
  const auto m = case_study_fixture();
  const auto dsm = build_dsm(m);
  const auto tri = triangulate(dsm);
  out.require(tri.cycles.size() == 2 && tri.cycles[0].members == test::ids("DEF") &&
                  tri.cycles[1].members == test::ids("IK"),
              "cycle groups differ from {D,E,F}, {I,K}");
  out.require(test::check_triangulation(m).empty(), test::check_triangulation(m));
  const auto g = test::index_graph(m);
  const auto oracle_groups = oracle::nontrivial_sccs(14, g.edges);
  const std::set<std::set<int>> expected = {{3, 4, 5}, {8, 10}};
  out.require(oracle_groups == expected, "SCC oracle disagrees with {D,E,F}, {I,K}");
  return out;
}

Outcome leveling() {
  Outcome out;
  const auto m = case_study_fixture();
  const auto dsm = build_dsm(m);
  const auto levels = assign_levels(triangulate(dsm), dsm);
  out.require(levels.at_level(1) == test::ids("AGJM"), "level 1 differs from {A,G,J,M}");
  out.require(levels.at_level(2) == test::ids("BIKL"), "level 2 differs from {B,I,K,L}");
  const auto g = test::index_graph(m);
  const auto expected = oracle::longest_path_levels(14, g.edges);
  for (const auto& [a, i] : g.index) {
    out.require(levels.level.at(a) == expected[i], "level of " + a.str() + " differs from the oracle");
  }
  return out;
}

Outcome ism_facts() {
  Outcome out;
  const auto ism = build_ism(case_study_fixture());
  auto is = [&](const char* a, int i, IsmMark mark) { return ism.mark(ActivityId(a), InterfaceId{i}) == mark; };
  out.require(is("H", 7, IsmMark::Control) && is("H", 9, IsmMark::Input) && is("H", 12, IsmMark::Output) &&
                  is("H", 18, IsmMark::Input),
              "row H differs from C@7, I@9, O@12, I@18");
  out.require(is("I", 13, IsmMark::Output) && is("I", 15, IsmMark::Input) && is("K", 13, IsmMark::Input) &&
                  is("K", 15, IsmMark::Output),
              "I/K cells at 13/15 differ");
  return out;
}

Outcome cda() {
  Outcome out;
  const auto m = case_study_fixture();
  const auto reduced = reduce_ism(build_ism(m));
  const auto clustering = cluster_reduced_ism(reduced);
  out.require(clustering.subprocesses.size() == 2, "expected 2 sub-processes");
  out.require(test::check_clustering(m).empty(), test::check_clustering(m));
  const auto pairs = detect_interdependencies(reduced);
  out.require(pairs == std::vector<InterdependentPair>{{ActivityId("I"), ActivityId("K"), {13}, {15}}},
              "interdependent pairs differ from (I,K) via (13,15)");
  return out;
}

Outcome properties() {
  Outcome out;
  const auto start = Clock::now();
  constexpr int kCases = 1000;
  std::mt19937 rng(20261015);
  auto run = [&](const char* name, test::GenOptions opt, int cases,
                 const std::function<std::string(const ProcessModel&)>& check) {
    for (int i = 0; i < cases && out.pass; ++i) {
      const auto m = test::random_model(rng, opt);
      const auto failure = check(m);
      out.require(failure.empty(), std::string(name) + ": " + failure);
    }
  };
  test::GenOptions up_to_10;
  test::GenOptions up_to_12;
  up_to_12.max_activities = 12;
  up_to_12.edge_probability = 0.1;
  test::GenOptions fancy;
  fancy.fancy_labels = true;
  test::GenOptions dense;
  dense.edge_probability = 0.3;

  run("triangulation", up_to_10, kCases, test::check_triangulation);
  run("triangulation (dense)", dense, kCases, test::check_triangulation);
  run("leveling", up_to_10, kCases, test::check_levels);
  run("clustering", up_to_12, kCases, test::check_clustering);
  run("interdependent pairs", dense, kCases, test::check_pairs_are_two_cycles);
  run("round trip", fancy, kCases, test::check_round_trip);
  run("dsm/ism agreement", up_to_10, kCases, test::check_dsm_ism_agreement);
  const auto elapsed = Clock::now() - start;
  out.require(elapsed < std::chrono::seconds(60), "property suite took longer than 60 s");
  if (out.pass) {
    out.detail = std::to_string(7 * kCases) + " cases in " +
                 std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()) + " ms";
  }
  return out;
}

Outcome determinism() {
  Outcome out;
  std::mt19937 rng(99);
  std::vector<ProcessModel> models{case_study_fixture()};
  for (int i = 0; i < 50; ++i) models.push_back(test::random_model(rng));
  auto render = [](const ProcessModel& m) {
    const auto a = analyze(parse_model(serialize_model(m)));
    std::string all;
    all += serialize_model(a.model);
    all += dsm_to_csv(a.dsm);
    all += dsm_to_csv(a.sorted_dsm);
    all += ism_to_csv(a.ism);
    all += ism_to_csv(a.reduced_ism);
    all += levels_to_json(a.levels, a.triangulation);
    all += clusters_to_json(a.clustering, a.interdependent);
    all += mmm_to_markdown(a.mmm);
    all += mmm_to_json(a.mmm);
    all += export_dot(a.model, a.triangulation, a.clustering);
    return all;
  };
  for (const auto& m : models) {
    const auto first = render(m);
    for (int repeat = 0; repeat < 3; ++repeat) out.require(render(m) == first, "exports differ across runs");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 fixture DSM reproduction", fixture_dsm},
      {"2 OA/DA detection", oa_da},
      {"3 cycle detection", cycles},
      {"4 leveling", leveling},
      {"5 ISM facts", ism_facts},
      {"6 CDA sub-processes and interdependency", cda},
      {"7 randomized property suite", properties},
      {"8 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name;
    if (!outcome.detail.empty()) std::cout << " (" << outcome.detail << ")";
    std::cout << '\n';
    failed += outcome.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
