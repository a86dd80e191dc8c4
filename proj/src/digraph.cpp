#include "dibrush/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "dibrush/error.hpp"

namespace dibrush {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw InvalidGraph("negative vertex count");
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw IndexOutOfRange("arc (" + std::to_string(a.tail) + ", " +
                            std::to_string(a.head) + ") with n = " + std::to_string(n));
    }
    if (a.tail == a.head) throw InvalidGraph("loop at vertex " + std::to_string(a.tail));
  }
  std::sort(arcs_.begin(), arcs_.end());
  auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end()) {
    throw InvalidGraph("duplicate arc (" + std::to_string(dup->tail) + ", " +
                       std::to_string(dup->head) + ")");
  }

  out_offset_.assign(n + 1, 0);
  in_offset_.assign(n + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offset_[a.tail + 1];
    ++in_offset_[a.head + 1];
  }
  for (int v = 0; v < n; ++v) {
    out_offset_[v + 1] += out_offset_[v];
    in_offset_[v + 1] += in_offset_[v];
  }
  out_heads_.resize(arcs_.size());
  in_tails_.resize(arcs_.size());
  std::vector<std::size_t> in_fill(in_offset_.begin(), in_offset_.end() - 1);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    out_heads_[i] = arcs_[i].head;
    in_tails_[in_fill[arcs_[i].head]++] = arcs_[i].tail;
  }
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
  return {out_heads_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]};
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
  return {in_tails_.data() + in_offset_[v], in_offset_[v + 1] - in_offset_[v]};
}

bool Digraph::has_arc(Vertex u, Vertex v) const { return arc_index(u, v).has_value(); }

std::optional<std::size_t> Digraph::arc_index(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  auto heads = out_neighbors(u);
  auto it = std::lower_bound(heads.begin(), heads.end(), v);
  if (it == heads.end() || *it != v) return std::nullopt;
  return out_offset_[u] + static_cast<std::size_t>(it - heads.begin());
}

Digraph transpose(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.size());
  for (const Arc& a : g.arcs()) arcs.push_back({a.head, a.tail});
  return Digraph(g.order(), std::move(arcs));
}

Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (index[a.tail] >= 0 && index[a.head] >= 0) arcs.push_back({index[a.tail], index[a.head]});
  }
  return Digraph(static_cast<int>(keep.size()), std::move(arcs));
}

Digraph relabel(const Digraph& g, std::span<const Vertex> perm) {
  std::vector<Arc> arcs;
  arcs.reserve(g.size());
  for (const Arc& a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return Digraph(g.order(), std::move(arcs));
}

Digraph remove_arc(const Digraph& g, Arc a) {
  if (!g.has_arc(a.tail, a.head)) {
    throw NotAnArc("(" + std::to_string(a.tail) + ", " + std::to_string(a.head) + ")");
  }
  std::vector<Arc> arcs;
  for (const Arc& b : g.arcs()) {
    if (b != a) arcs.push_back(b);
  }
  return Digraph(g.order(), std::move(arcs));
}

std::optional<std::vector<Vertex>> topological_order(const Digraph& g) {
  const int n = g.order();
  std::vector<int> indeg(n);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    indeg[v] = g.in_degree(v);
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : g.out_neighbors(v)) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool is_acyclic(const Digraph& g) { return topological_order(g).has_value(); }

StructureReport classify(const Digraph& g) {
  StructureReport r;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int in = g.in_degree(v);
    const int out = g.out_degree(v);
    if (in == 0 && out == 0) {
      r.isolated.push_back(v);
    } else if (in == 0) {
      r.sources.push_back(v);
    } else if (out == 0) {
      r.sinks.push_back(v);
    }
  }
  r.topological_order = topological_order(g);
  r.is_dag = r.topological_order.has_value();
  return r;
}

bool is_tournament(const Digraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  if (g.size() != n * (n - (n > 0 ? 1 : 0)) / 2) return false;
  for (const Arc& a : g.arcs()) {
    if (g.has_arc(a.head, a.tail)) return false;
  }
  return true;
}

}  // namespace dibrush
