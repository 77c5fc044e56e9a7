#pragma once

#include <string>
#include <vector>

#include "mmm/ism.hpp"
#include "mmm/model.hpp"

namespace mmm {

/// One block of the clustered ISM: activities (ISM row order) and interfaces
/// (ascending) that can proceed independently of other blocks.
struct SubProcess {
  std::string id;  ///< S1, S2, ... in discovery order
  std::vector<ActivityId> activities;
  std::vector<InterfaceId> interfaces;

  friend bool operator==(const SubProcess&, const SubProcess&) = default;
};

struct Clustering {
  std::vector<SubProcess> subprocesses;
  std::vector<ActivityId> isolated;  ///< rows carrying no mark

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

/// Two activities feeding each other: `first` outputs through one of p/q and
/// takes input through the other, `second` the reverse. `first` is the
/// earlier ISM row and p < q.
struct InterdependentPair {
  ActivityId first;
  ActivityId second;
  InterfaceId p;
  InterfaceId q;

  friend bool operator==(const InterdependentPair&, const InterdependentPair&) = default;
};

/// Cluster determination on a reduced ISM.
///
/// Take the first row not yet clustered and strike it horizontally; strike
/// vertically every column marked in a struck row, then horizontally every
/// row marked in a struck column, until nothing new is struck. The doubly
/// struck rows and columns form the next sub-process and are removed; the
/// loop ends when no marked row remains.
///
/// Throws Error `control-column-present` if the ISM was not reduced.
Clustering cluster_reduced_ism(const Ism& ism);

/// Every activity pair matching the mutual-dependency mark pattern
/// (K,q)=O, (K,p)=I, (L,q)=I, (L,p)=O, ordered by first row then p.
std::vector<InterdependentPair> detect_interdependencies(const Ism& ism);

/// `{"interdependent": [...], "isolated": [...], "subprocesses": [...]}`.
std::string clusters_to_json(const Clustering& clustering,
                             const std::vector<InterdependentPair>& pairs);

}  // namespace mmm
