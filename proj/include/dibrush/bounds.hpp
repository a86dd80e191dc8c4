#pragma once

#include <optional>
#include <vector>

#include "dibrush/digraph.hpp"

namespace dibrush {

struct DegreeBounds {
  int lower = 0;  // max(max firing threshold, isolated count)
  int upper = 0;  // |A| + isolated count
};

DegreeBounds degree_bounds(const Digraph& g);

struct CutBound {
  int value = 0;
  std::vector<Vertex> witness;  // S; empty when no admissible cut exists
};

/// Largest |[S, S-bar]| over non-trivial S with no arc entering S. Subsets
/// are scanned in increasing bitmask order; the first maximiser wins.
/// Throws TooLarge when n exceeds subset_cap.
CutBound best_cut_lower_bound(const Digraph& g, int subset_cap = 20);

/// max(sum of out-degrees over sources, sum of in-degrees over sinks) for a
/// digraph whose underlying graph is a tree. Throws NotATree.
int tree_duality_bound(const Digraph& t);

/// True when the underlying undirected graph is a tree (connected, n-1
/// arcs, no antiparallel pair).
bool is_directed_tree(const Digraph& g);

/// Half the sum of |deg+(v) - deg-(v)|.
int pn_lower_bound(const Digraph& g);

/// deg+(v) - deg-(v) for every vertex.
std::vector<int> excess_vector(const Digraph& g);

struct BoundReport {
  int max_outdeg = 0;
  int arc_count = 0;
  DegreeBounds degree;
  std::optional<CutBound> cut;          // absent when n > subset cap
  std::optional<int> tree_duality;      // directed trees only
  std::optional<int> pn_lower;          // DAGs only

  /// Largest lower bound in the report.
  int best_lower() const;
};

BoundReport bound_report(const Digraph& g, int subset_cap = 20);

}  // namespace dibrush
