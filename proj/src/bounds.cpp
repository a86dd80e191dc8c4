#include "dibrush/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "dibrush/engine.hpp"
#include "dibrush/error.hpp"

namespace dibrush {

DegreeBounds degree_bounds(const Digraph& g) {
  DegreeBounds b;
  int isolated = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    b.lower = std::max(b.lower, firing_threshold(g, v));
    if (g.is_isolated(v)) ++isolated;
  }
  b.lower = std::max(b.lower, isolated);
  b.upper = static_cast<int>(g.size()) + isolated;
  return b;
}

CutBound best_cut_lower_bound(const Digraph& g, int subset_cap) {
  const int n = g.order();
  if (n > subset_cap || n > 30) {
    throw TooLarge("cut enumeration over " + std::to_string(n) + " vertices exceeds cap " +
                   std::to_string(std::min(subset_cap, 30)));
  }
  CutBound best;
  if (n < 2) return best;
  std::vector<std::uint32_t> out_mask(n, 0), in_mask(n, 0);
  for (const Arc& a : g.arcs()) {
    out_mask[a.tail] |= 1u << a.head;
    in_mask[a.head] |= 1u << a.tail;
  }
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  std::uint32_t best_mask = 0;
  for (std::uint32_t s = 1; s < all; ++s) {
    const std::uint32_t rest = all & ~s;
    bool admissible = true;
    int value = 0;
    for (std::uint32_t bits = s; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      if (in_mask[v] & rest) {
        admissible = false;
        break;
      }
      value += std::popcount(out_mask[v] & rest);
    }
    if (admissible && value > best.value) {
      best.value = value;
      best_mask = s;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (best_mask & (1u << v)) best.witness.push_back(v);
  }
  return best;
}

bool is_directed_tree(const Digraph& g) {
  const int n = g.order();
  if (n == 0 || static_cast<int>(g.size()) != n - 1) return false;
  for (const Arc& a : g.arcs()) {
    if (g.has_arc(a.head, a.tail)) return false;
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    auto visit = [&](Vertex w) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    };
    for (Vertex w : g.out_neighbors(v)) visit(w);
    for (Vertex w : g.in_neighbors(v)) visit(w);
  }
  return reached == n;
}

int tree_duality_bound(const Digraph& t) {
  if (!is_directed_tree(t)) throw NotATree("underlying graph is not a tree");
  int from_sources = 0;
  int into_sinks = 0;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.in_degree(v) == 0) from_sources += t.out_degree(v);
    if (t.out_degree(v) == 0) into_sinks += t.in_degree(v);
  }
  return std::max(from_sources, into_sinks);
}

std::vector<int> excess_vector(const Digraph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.out_degree(v) - g.in_degree(v);
  return d;
}

int pn_lower_bound(const Digraph& g) {
  int sum = 0;
  for (int d : excess_vector(g)) sum += std::abs(d);
  return sum / 2;
}

int BoundReport::best_lower() const {
  int best = degree.lower;
  if (cut) best = std::max(best, cut->value);
  if (tree_duality) best = std::max(best, *tree_duality);
  return best;
}

BoundReport bound_report(const Digraph& g, int subset_cap) {
  BoundReport r;
  for (Vertex v = 0; v < g.order(); ++v) r.max_outdeg = std::max(r.max_outdeg, g.out_degree(v));
  r.arc_count = static_cast<int>(g.size());
  r.degree = degree_bounds(g);
  if (g.order() <= subset_cap) r.cut = best_cut_lower_bound(g, subset_cap);
  if (is_directed_tree(g)) r.tree_duality = tree_duality_bound(g);
  if (is_acyclic(g)) r.pn_lower = pn_lower_bound(g);
  return r;
}

}  // namespace dibrush
