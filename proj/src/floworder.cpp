#include "dibrush/floworder.hpp"

#include <string>

#include "dibrush/error.hpp"
#include "maxflow.hpp"

namespace dibrush {

namespace {

using detail::Dinic;

// Circulation with bounds on every arc (all nodes conserve flow), found with
// the usual excess/deficit reduction to one max-flow.
std::optional<std::vector<int>> find_circulation(int node_count,
                                                 const std::vector<NetworkArc>& arcs) {
  const int super_s = node_count;
  const int super_t = node_count + 1;
  Dinic dinic(node_count + 2);
  std::vector<long long> excess(node_count, 0);
  std::vector<int> ids;
  ids.reserve(arcs.size());
  for (const NetworkArc& a : arcs) {
    if (a.lower > a.upper) return std::nullopt;
    ids.push_back(dinic.add_edge(a.from, a.to, a.upper - a.lower));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  long long need = 0;
  for (int v = 0; v < node_count; ++v) {
    if (excess[v] > 0) {
      dinic.add_edge(super_s, v, excess[v]);
      need += excess[v];
    } else if (excess[v] < 0) {
      dinic.add_edge(v, super_t, -excess[v]);
    }
  }
  if (dinic.max_flow(super_s, super_t) < need) return std::nullopt;
  std::vector<int> flow(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    flow[i] = arcs[i].lower + static_cast<int>(dinic.pushed(ids[i]));
  }
  return flow;
}

}  // namespace

FlowNetwork build_order_network(const Digraph& g, std::span<const Vertex> order) {
  const int n = g.order();
  if (!is_permutation_of_vertices(order, n)) {
    throw InvalidPlan("firing order is not a permutation of 0.." + std::to_string(n - 1));
  }
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  FlowNetwork net;
  net.node_count = n + 2;
  net.source = n;
  net.sink = n + 1;
  const int cap = static_cast<int>(g.size()) + n;

  net.graph_arc.reserve(g.size());
  for (const Arc& a : g.arcs()) {
    net.graph_arc.push_back(net.arcs.size());
    if (position[a.tail] < position[a.head]) {
      net.arcs.push_back({a.tail, a.head, 1, cap});
    } else {
      net.arcs.push_back({a.tail, net.sink, 1, cap});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    net.supply_arc.push_back(net.arcs.size());
    net.arcs.push_back({net.source, v, 0, cap});
    net.retain_arc.push_back(net.arcs.size());
    net.arcs.push_back({v, net.sink, g.is_isolated(v) ? 1 : 0, cap});
  }
  return net;
}

std::vector<int> solve_min_flow(const FlowNetwork& net) {
  const int super_s = net.node_count;
  const int super_t = net.node_count + 1;
  Dinic dinic(net.node_count + 2);
  std::vector<long long> excess(net.node_count, 0);
  std::vector<int> ids;
  ids.reserve(net.arcs.size());
  for (const NetworkArc& a : net.arcs) {
    if (a.lower > a.upper) throw InfeasibleNetwork("arc with lower bound above its capacity");
    ids.push_back(dinic.add_edge(a.from, a.to, a.upper - a.lower));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  const int back = dinic.add_edge(net.sink, net.source, Dinic::kInf);
  std::vector<int> auxiliary;
  long long need = 0;
  for (int v = 0; v < net.node_count; ++v) {
    if (excess[v] > 0) {
      auxiliary.push_back(dinic.add_edge(super_s, v, excess[v]));
      need += excess[v];
    } else if (excess[v] < 0) {
      auxiliary.push_back(dinic.add_edge(v, super_t, -excess[v]));
    }
  }
  if (dinic.max_flow(super_s, super_t) < need) {
    throw InfeasibleNetwork("lower bounds cannot be met");
  }

  // Drop the auxiliary terminals and the return arc, then cancel as much
  // source-to-sink flow as the residual graph allows.
  for (int id : auxiliary) dinic.disable(id);
  dinic.disable(back);
  dinic.max_flow(net.sink, net.source);

  std::vector<int> flow(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    flow[i] = net.arcs[i].lower + static_cast<int>(dinic.pushed(ids[i]));
  }
  return flow;
}

int source_outflow(const FlowNetwork& net, std::span<const int> flow) {
  int total = 0;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (net.arcs[i].from == net.source) total += flow[i];
    if (net.arcs[i].to == net.source) total -= flow[i];
  }
  return total;
}

int min_total_for_order(const Digraph& g, std::span<const Vertex> order) {
  const FlowNetwork net = build_order_network(g, order);
  return source_outflow(net, solve_min_flow(net));
}

OrderSolution min_initial_for_order(const Digraph& g, std::span<const Vertex> order) {
  FlowNetwork net = build_order_network(g, order);
  std::vector<int> current = solve_min_flow(net);
  const int total = source_outflow(net, current);

  // Pin the total with a return arc, then raise each vertex's initial
  // brushes as far as possible in firing order.
  std::vector<NetworkArc> arcs = net.arcs;
  arcs.push_back({net.sink, net.source, total, total});
  int fixed = 0;
  for (Vertex v : order) {
    NetworkArc& supply = arcs[net.supply_arc[v]];
    int lo = current[net.supply_arc[v]];
    int hi = total - fixed;
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      supply.lower = mid;
      if (auto flow = find_circulation(net.node_count, arcs)) {
        current = std::move(*flow);
        lo = current[net.supply_arc[v]];
      } else {
        hi = mid - 1;
      }
    }
    supply.lower = supply.upper = lo;
    fixed += lo;
    if (current[net.supply_arc[v]] != lo) {
      auto flow = find_circulation(net.node_count, arcs);
      if (!flow) throw InfeasibleNetwork("tie-breaking lost feasibility");
      current = std::move(*flow);
    }
  }

  OrderSolution sol;
  sol.total = total;
  sol.order.assign(order.begin(), order.end());
  sol.initial.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) sol.initial[v] = current[net.supply_arc[v]];
  sol.flows.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    sol.flows.push_back({g.arcs()[i].tail, g.arcs()[i].head, current[net.graph_arc[i]]});
  }
  return sol;
}

}  // namespace dibrush
