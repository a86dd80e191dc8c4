#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dibrush/digraph.hpp"

namespace dibrush {

struct ArcFlow {
  Vertex tail = 0;
  Vertex head = 0;
  int flow = 0;

  bool operator==(const ArcFlow&) const = default;
};

/// Initial brush configuration, firing order and (optionally) the number of
/// brushes each arc carries. Without explicit flows the engine falls back to
/// default_dispersal.
struct BrushPlan {
  std::vector<int> initial;
  std::vector<Vertex> order;
  std::optional<std::vector<ArcFlow>> flows;

  int total() const;
  bool operator==(const BrushPlan&) const = default;
};

struct TraceStep {
  int t = 0;
  std::vector<int> brushes;
  std::vector<Vertex> clean_vertices;
  std::vector<Arc> clean_arcs;
};

/// Record of a successful run: one step per time t = 0..n, the flows that
/// were dispatched (canonical arc order) and the vertex sequence each brush
/// visited. Brush ids are assigned by initial vertex, ascending.
struct CleaningTrace {
  std::vector<TraceStep> steps;
  int total = 0;
  std::vector<Vertex> order;
  std::vector<ArcFlow> flows;
  std::vector<std::vector<Vertex>> brush_paths;

  /// Every vertex and arc is clean at the last step.
  bool complete(const Digraph& g) const;
  const std::vector<int>& final_brushes() const { return steps.back().brushes; }
};

/// Brushes a vertex must hold to fire: 1 if isolated, otherwise deg+(v).
int firing_threshold(const Digraph& g, Vertex v);

/// Per-out-arc flows (aligned with g.out_neighbors(v)) for a vertex holding
/// `held` >= threshold brushes: one brush per out-arc, surplus dealt
/// round-robin over not-yet-fired out-neighbours in ascending index order.
/// Surplus stays at v when every out-neighbour has already fired.
std::vector<int> default_dispersal(const Digraph& g, Vertex v, int held,
                                   const std::vector<bool>& fired);

/// Simulates the plan. Throws InvalidPlan for malformed plans,
/// InsufficientBrushes when a vertex cannot fire and IllegalFlow when an
/// explicit flow is missing, non-positive, on a non-arc or overdraws.
///
/// When several brushes leave a vertex, lower brush ids go first to heads
/// that fire sooner; heads that have already fired come last.
CleaningTrace run(const Digraph& g, const BrushPlan& plan);

/// The plan (explicit flows) that replays a trace exactly.
BrushPlan replay_plan(const CleaningTrace& trace);

bool is_permutation_of_vertices(std::span<const Vertex> order, int n);

}  // namespace dibrush
