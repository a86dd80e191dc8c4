#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dibrush/digraph.hpp"
#include "dibrush/engine.hpp"

namespace dibrush {

struct NetworkArc {
  int from = 0;
  int to = 0;
  int lower = 0;
  int upper = 0;
};

/// Min-flow-with-lower-bounds instance for one firing order. Nodes 0..n-1
/// are the graph vertices, `source` and `sink` the two extra terminals.
///
///   s -> v          [0, cap]  initial brushes at v
///   u -> v          [1, cap]  arc fired forward (u before v)
///   u -> t          [1, cap]  arc fired backward; the brush is stranded at v
///   v -> t          [0 or 1, cap]  brushes left at v (lower 1 if isolated)
///
/// cap = |A| + n. Conservation at v plus the unit lower bounds on its
/// out-arcs enforce "v holds at least deg+(v) brushes when it fires".
struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<NetworkArc> arcs;
  std::vector<std::size_t> graph_arc;   // by canonical graph arc index
  std::vector<std::size_t> supply_arc;  // s -> v, by vertex
  std::vector<std::size_t> retain_arc;  // v -> t, by vertex
};

FlowNetwork build_order_network(const Digraph& g, std::span<const Vertex> order);

/// Feasible integral flow meeting every lower bound with the smallest
/// source outflow: a feasibility pass through an auxiliary max-flow, then
/// max-flow from sink back to source in the residual graph. Returns one
/// value per network arc. Throws InfeasibleNetwork.
std::vector<int> solve_min_flow(const FlowNetwork& net);

/// Outflow of the source under a flow returned by solve_min_flow.
int source_outflow(const FlowNetwork& net, std::span<const int> flow);

struct OrderSolution {
  int total = 0;
  std::vector<int> initial;
  std::vector<ArcFlow> flows;  // canonical arc order
  std::vector<Vertex> order;

  BrushPlan plan() const { return {initial, order, flows}; }
};

/// Smallest total initial configuration that lets `order` clean g, with a
/// witness. Among optimal configurations the one that is lexicographically
/// largest by firing position is returned (brushes sit as early as possible).
OrderSolution min_initial_for_order(const Digraph& g, std::span<const Vertex> order);

/// Value-only variant of min_initial_for_order for search loops.
int min_total_for_order(const Digraph& g, std::span<const Vertex> order);

}  // namespace dibrush
