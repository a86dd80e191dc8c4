#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dibrush {

using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Immutable simple digraph on vertices 0..n-1. Loops and parallel arcs are
/// rejected; antiparallel pairs are allowed. Arcs are kept in lexicographic
/// order, so two equal graphs have identical arc lists.
class Digraph {
 public:
  Digraph() = default;

  /// Throws IndexOutOfRange for endpoints >= n, InvalidGraph for loops or
  /// duplicate arcs.
  Digraph(int n, std::vector<Arc> arcs);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return arcs_.size(); }

  std::span<const Arc> arcs() const noexcept { return arcs_; }

  /// Heads of the out-arcs of v, ascending.
  std::span<const Vertex> out_neighbors(Vertex v) const;
  /// Tails of the in-arcs of v, ascending.
  std::span<const Vertex> in_neighbors(Vertex v) const;

  int out_degree(Vertex v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_neighbors(v).size()); }
  bool is_isolated(Vertex v) const { return out_degree(v) == 0 && in_degree(v) == 0; }

  bool has_arc(Vertex u, Vertex v) const;

  /// Position of (u, v) in arcs(), if present.
  std::optional<std::size_t> arc_index(Vertex u, Vertex v) const;

  /// Index into arcs() of the k-th out-arc of v (out-arcs of a vertex are
  /// contiguous in canonical order).
  std::size_t out_arc_index(Vertex v, std::size_t k) const { return out_offset_[v] + k; }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offset_{0};
  std::vector<Vertex> out_heads_;
  std::vector<std::size_t> in_offset_{0};
  std::vector<Vertex> in_tails_;
};

Digraph transpose(const Digraph& g);

/// Subgraph induced by `keep` (ascending, distinct), relabelled 0..k-1 in
/// the order given.
Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> keep);

/// Applies a vertex relabelling: vertex v of g becomes perm[v].
Digraph relabel(const Digraph& g, std::span<const Vertex> perm);

Digraph remove_arc(const Digraph& g, Arc a);

struct StructureReport {
  bool is_dag = false;
  std::vector<Vertex> sources;   // in-degree 0, out-degree > 0
  std::vector<Vertex> sinks;     // out-degree 0, in-degree > 0
  std::vector<Vertex> isolated;
  std::optional<std::vector<Vertex>> topological_order;
};

StructureReport classify(const Digraph& g);

/// Kahn's algorithm, always taking the lowest-index available vertex.
std::optional<std::vector<Vertex>> topological_order(const Digraph& g);

bool is_acyclic(const Digraph& g);

/// True when every ordered pair is an arc in exactly one direction.
bool is_tournament(const Digraph& g);

}  // namespace dibrush
