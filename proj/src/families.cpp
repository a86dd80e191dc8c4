#include "dibrush/families.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dibrush/error.hpp"

namespace dibrush {

UnitRng::UnitRng(std::uint64_t seed) : state_(seed) {}

std::uint64_t UnitRng::next_u64() {
  // splitmix64; pure integer arithmetic so seeds reproduce on every toolchain.
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double UnitRng::next() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t UnitRng::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

std::optional<std::string> rotational_spec_error(int n, const std::vector<int>& symbols) {
  if (n < 1) return "n must be positive";
  if (n % 2 == 0) return "rotational tournaments need odd n, got " + std::to_string(n);
  std::set<int> seen;
  for (int s : symbols) {
    if (s < 1 || s > n - 1) return "symbol " + std::to_string(s) + " outside 1..n-1";
    if (!seen.insert(s).second) return "duplicate symbol " + std::to_string(s);
  }
  for (int s : symbols) {
    if (seen.count(n - s)) {
      return "symbols " + std::to_string(s) + " and " + std::to_string(n - s) +
             " are complementary mod " + std::to_string(n);
    }
  }
  if (static_cast<int>(symbols.size()) != (n - 1) / 2) {
    return "need exactly (n-1)/2 = " + std::to_string((n - 1) / 2) + " symbols, got " +
           std::to_string(symbols.size());
  }
  return std::nullopt;
}

Digraph transitive_tournament(int n) {
  if (n < 0) throw InvalidFamilySpec("negative n");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) arcs.push_back({i, j});
  return Digraph(n, std::move(arcs));
}

Digraph complete_digraph(int n) {
  if (n < 0) throw InvalidFamilySpec("negative n");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) arcs.push_back({i, j});
  return Digraph(n, std::move(arcs));
}

Digraph rotational_tournament(int n, const std::vector<int>& symbols) {
  if (auto err = rotational_spec_error(n, symbols)) throw InvalidFamilySpec(*err);
  std::vector<Arc> arcs;
  for (Vertex x = 0; x < n; ++x)
    for (int s : symbols) arcs.push_back({x, (x + s) % n});
  return Digraph(n, std::move(arcs));
}

Digraph rooted_tree(const std::vector<std::vector<Vertex>>& children) {
  const int n = static_cast<int>(children.size());
  if (n == 0) throw InvalidFamilySpec("rooted tree needs at least one vertex");
  std::vector<int> parent_count(n, 0);
  std::vector<Arc> arcs;
  for (Vertex p = 0; p < n; ++p) {
    for (Vertex c : children[p]) {
      if (c < 0 || c >= n) throw InvalidFamilySpec("child " + std::to_string(c) + " out of range");
      if (c == 0) throw InvalidFamilySpec("root 0 listed as a child (cyclic child list)");
      if (++parent_count[c] > 1) {
        throw InvalidFamilySpec("vertex " + std::to_string(c) + " has two parents");
      }
      arcs.push_back({p, c});
    }
  }
  // Every vertex must be reachable from the root; otherwise the child lists
  // contain a cycle detached from 0.
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex c : children[v]) {
      if (!seen[c]) {
        seen[c] = true;
        ++reached;
        stack.push_back(c);
      }
    }
  }
  if (reached != n) throw InvalidFamilySpec("cyclic child list: not every vertex hangs off root 0");
  return Digraph(n, std::move(arcs));
}

Digraph random_dag(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidFamilySpec("negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidFamilySpec("p must lie in [0, 1]");
  UnitRng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.next() < p) arcs.push_back({i, j});
  return Digraph(n, std::move(arcs));
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidFamilySpec("negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidFamilySpec("p must lie in [0, 1]");
  UnitRng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && rng.next() < p) arcs.push_back({i, j});
  return Digraph(n, std::move(arcs));
}

Digraph random_rooted_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidFamilySpec("rooted tree needs at least one vertex");
  UnitRng rng(seed);
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v = 1; v < n; ++v) {
    children[rng.below(static_cast<std::uint64_t>(v))].push_back(v);
  }
  return rooted_tree(children);
}

Digraph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::TransitiveTournament:
      return transitive_tournament(spec.n);
    case Family::Complete:
      return complete_digraph(spec.n);
    case Family::Rotational:
      return rotational_tournament(spec.n, spec.symbols);
    case Family::RootedTree:
      return rooted_tree(spec.children);
    case Family::RandomDag:
      return random_dag(spec.n, spec.p, spec.seed);
  }
  throw InvalidFamilySpec("unknown family");
}

Digraph bowtie_graph() {
  return Digraph(8, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}});
}

Digraph converging_graph() { return Digraph(4, {{0, 1}, {0, 2}, {1, 2}, {3, 2}}); }

Digraph layered_six_graph() {
  return Digraph(6, {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

Arc layered_six_arc() { return {2, 3}; }

}  // namespace dibrush
