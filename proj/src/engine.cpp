#include "dibrush/engine.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dibrush/error.hpp"

namespace dibrush {

namespace {

std::string arc_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

// Explicit flows laid out by canonical arc index; -1 marks "not given".
std::vector<int> index_flows(const Digraph& g, const std::vector<ArcFlow>& flows) {
  std::vector<int> by_arc(g.size(), -1);
  for (const ArcFlow& f : flows) {
    auto idx = g.arc_index(f.tail, f.head);
    if (!idx) throw IllegalFlow(arc_name(f.tail, f.head) + " is not an arc");
    if (by_arc[*idx] != -1) throw IllegalFlow(arc_name(f.tail, f.head) + " given twice");
    if (f.flow < 1) {
      throw IllegalFlow(arc_name(f.tail, f.head) + " carries " + std::to_string(f.flow) +
                        " brushes; every arc needs at least one");
    }
    by_arc[*idx] = f.flow;
  }
  for (std::size_t i = 0; i < by_arc.size(); ++i) {
    if (by_arc[i] == -1) {
      throw IllegalFlow(arc_name(g.arcs()[i].tail, g.arcs()[i].head) + " has no flow");
    }
  }
  return by_arc;
}

TraceStep snapshot(const Digraph& g, int t, const std::vector<std::vector<int>>& holdings,
                   const std::vector<bool>& fired) {
  TraceStep step;
  step.t = t;
  step.brushes.reserve(holdings.size());
  for (const auto& h : holdings) step.brushes.push_back(static_cast<int>(h.size()));
  for (Vertex v = 0; v < g.order(); ++v) {
    if (fired[v]) step.clean_vertices.push_back(v);
  }
  for (const Arc& a : g.arcs()) {
    if (fired[a.tail]) step.clean_arcs.push_back(a);
  }
  return step;
}

}  // namespace

int BrushPlan::total() const { return std::accumulate(initial.begin(), initial.end(), 0); }

bool CleaningTrace::complete(const Digraph& g) const {
  if (steps.empty()) return false;
  const TraceStep& last = steps.back();
  return static_cast<int>(last.clean_vertices.size()) == g.order() &&
         last.clean_arcs.size() == g.size();
}

int firing_threshold(const Digraph& g, Vertex v) {
  return g.is_isolated(v) ? 1 : g.out_degree(v);
}

bool is_permutation_of_vertices(std::span<const Vertex> order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<int> default_dispersal(const Digraph& g, Vertex v, int held,
                                   const std::vector<bool>& fired) {
  auto heads = g.out_neighbors(v);
  std::vector<int> flows(heads.size(), 1);
  int surplus = held - static_cast<int>(heads.size());
  if (surplus <= 0) return flows;
  std::vector<std::size_t> open;
  for (std::size_t k = 0; k < heads.size(); ++k) {
    if (!fired[heads[k]]) open.push_back(k);
  }
  if (open.empty()) return flows;
  const int share = surplus / static_cast<int>(open.size());
  const int extra = surplus % static_cast<int>(open.size());
  for (std::size_t j = 0; j < open.size(); ++j) {
    flows[open[j]] += share + (static_cast<int>(j) < extra ? 1 : 0);
  }
  return flows;
}

CleaningTrace run(const Digraph& g, const BrushPlan& plan) {
  const int n = g.order();
  if (static_cast<int>(plan.initial.size()) != n) {
    throw InvalidPlan("initial configuration has " + std::to_string(plan.initial.size()) +
                      " entries for " + std::to_string(n) + " vertices");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (plan.initial[v] < 0) throw InvalidPlan("negative brush count at vertex " + std::to_string(v));
  }
  if (!is_permutation_of_vertices(plan.order, n)) {
    throw InvalidPlan("firing order is not a permutation of 0.." + std::to_string(n - 1));
  }
  std::vector<int> explicit_flows;
  if (plan.flows) explicit_flows = index_flows(g, *plan.flows);

  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[plan.order[i]] = i;

  CleaningTrace trace;
  trace.order = plan.order;
  std::vector<std::vector<int>> holdings(n);
  for (Vertex v = 0; v < n; ++v) {
    for (int k = 0; k < plan.initial[v]; ++k) {
      holdings[v].push_back(static_cast<int>(trace.brush_paths.size()));
      trace.brush_paths.push_back({v});
    }
  }
  trace.total = static_cast<int>(trace.brush_paths.size());

  std::vector<bool> fired(n, false);
  std::vector<int> dispatched(g.size(), 0);
  trace.steps.push_back(snapshot(g, 0, holdings, fired));

  for (int i = 0; i < n; ++i) {
    const Vertex v = plan.order[i];
    const int held = static_cast<int>(holdings[v].size());
    const int need = firing_threshold(g, v);
    if (held < need) throw InsufficientBrushes(v, held, need, i + 1);

    auto heads = g.out_neighbors(v);
    std::vector<int> flows;
    if (plan.flows) {
      flows.reserve(heads.size());
      for (std::size_t k = 0; k < heads.size(); ++k) {
        flows.push_back(explicit_flows[g.out_arc_index(v, k)]);
      }
    } else {
      flows = default_dispersal(g, v, held, fired);
    }
    const int out = std::accumulate(flows.begin(), flows.end(), 0);
    if (out > held) {
      throw IllegalFlow("vertex " + std::to_string(v) + " dispatches " + std::to_string(out) +
                        " brushes but holds " + std::to_string(held) + " at step " +
                        std::to_string(i + 1));
    }

    std::vector<std::size_t> slots(heads.size());
    std::iota(slots.begin(), slots.end(), 0);
    std::stable_sort(slots.begin(), slots.end(), [&](std::size_t a, std::size_t b) {
      const Vertex wa = heads[a];
      const Vertex wb = heads[b];
      if (fired[wa] != fired[wb]) return !fired[wa];
      return position[wa] < position[wb];
    });

    std::vector<int>& mine = holdings[v];
    std::size_t next = 0;
    for (std::size_t k : slots) {
      const Vertex w = heads[k];
      for (int c = 0; c < flows[k]; ++c) {
        const int brush = mine[next++];
        trace.brush_paths[brush].push_back(w);
        holdings[w].push_back(brush);
      }
      std::sort(holdings[w].begin(), holdings[w].end());
      dispatched[g.out_arc_index(v, k)] = flows[k];
    }
    mine.erase(mine.begin(), mine.begin() + static_cast<std::ptrdiff_t>(next));
    fired[v] = true;
    trace.steps.push_back(snapshot(g, i + 1, holdings, fired));
  }

  trace.flows.reserve(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    trace.flows.push_back({g.arcs()[a].tail, g.arcs()[a].head, dispatched[a]});
  }
  return trace;
}

BrushPlan replay_plan(const CleaningTrace& trace) {
  BrushPlan plan;
  plan.initial = trace.steps.front().brushes;
  plan.order = trace.order;
  plan.flows = trace.flows;
  return plan;
}

}  // namespace dibrush
