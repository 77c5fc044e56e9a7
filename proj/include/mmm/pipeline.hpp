#pragma once

#include <string>
#include <vector>

#include "mmm/cda.hpp"
#include "mmm/dsm.hpp"
#include "mmm/ism.hpp"
#include "mmm/mixed_matrix.hpp"
#include "mmm/model.hpp"
#include "mmm/triangulation.hpp"

namespace mmm {

/// Every intermediate product of one model, computed in dependency order.
struct Analysis {
  ProcessModel model;
  Dsm dsm;             ///< declared activity order
  TriangulationResult triangulation;
  Dsm sorted_dsm;      ///< triangulated order
  LevelAssignment levels;
  Ism ism;
  Ism reduced_ism;
  Clustering clustering;
  std::vector<InterdependentPair> interdependent;
  MixedMatrixModel mmm;
};

Analysis analyze(ProcessModel model);

/// Graphviz digraph: one cluster subgraph per sub-process, isolated
/// activities at top level, io flows labelled by interface id and backward
/// flows of the triangulated ordering drawn dashed red.
std::string export_dot(const ProcessModel& model, const TriangulationResult& tri,
                       const Clustering& clustering);

}  // namespace mmm
