#pragma once

#include <cstdint>
#include <vector>

#include "dibrush/digraph.hpp"
#include "dibrush/engine.hpp"

namespace dibrush {

inline constexpr int kDefaultSolverCap = 9;
inline constexpr int kHardSolverCap = 12;

struct SolveOptions {
  bool topo_only = false;
  int workers = 1;
  int cap = kDefaultSolverCap;
  /// Start the search from the best applicable strategy plan.
  bool seed_with_strategies = true;
};

struct SolveStats {
  std::int64_t orders_explored = 0;
  std::int64_t pruned = 0;
  int lower_bound_used = 0;
};

struct SolveResult {
  int value = 0;
  BrushPlan witness;  // lexicographically least optimal order, explicit flows
  SolveStats stats;
};

/// Brushing number by branch and bound over firing orders. Throws TooLarge
/// when n exceeds min(opts.cap, kHardSolverCap) and TopoOnlyOnCyclic.
SolveResult brushing_number_exact(const Digraph& g, const SolveOptions& opts = {});

/// Exhaustive search over orders and brush splits that does not use the
/// flow reduction. Throws TooLarge for n > 5.
int brushing_number_bruteforce(const Digraph& g);

struct ConjectureEntry {
  Digraph tournament;
  int value = 0;
};

struct ConjectureReport {
  int n = 0;
  int bound = 0;  // (n^2 - 4n + 7) / 4
  int max_value = 0;
  bool holds = true;
  std::vector<ConjectureEntry> tournaments;
};

/// Every labelled regular tournament on n vertices, in lexicographic order
/// of arc orientations. Throws BadSize for even n.
std::vector<Digraph> regular_tournaments(int n);

/// Solves every regular tournament on n vertices and compares the largest
/// value with the conjectured bound. Throws BadSize for even n and TooLarge
/// for n > 7.
ConjectureReport conjecture_explorer(int n, const SolveOptions& opts = {});

}  // namespace dibrush
