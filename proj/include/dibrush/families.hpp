#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dibrush/digraph.hpp"

namespace dibrush {

enum class Family { TransitiveTournament, Complete, Rotational, RootedTree, RandomDag };

/// Parameters for one of the generated graph families. Only the fields the
/// family uses are read.
struct FamilySpec {
  Family family = Family::TransitiveTournament;
  int n = 0;
  std::vector<int> symbols;                 // rotational
  std::vector<std::vector<Vertex>> children;  // rooted tree, indexed by parent
  double p = 0.0;                           // random dag
  std::uint64_t seed = 0;                   // random dag

  static FamilySpec transitive(int n) { return make(Family::TransitiveTournament, n); }
  static FamilySpec complete(int n) { return make(Family::Complete, n); }
  static FamilySpec rotational(int n, std::vector<int> symbols) {
    FamilySpec s = make(Family::Rotational, n);
    s.symbols = std::move(symbols);
    return s;
  }
  static FamilySpec rooted_tree(std::vector<std::vector<Vertex>> children) {
    FamilySpec s = make(Family::RootedTree, static_cast<int>(children.size()));
    s.children = std::move(children);
    return s;
  }
  static FamilySpec random_dag(int n, double p, std::uint64_t seed) {
    FamilySpec s = make(Family::RandomDag, n);
    s.p = p;
    s.seed = seed;
    return s;
  }

 private:
  static FamilySpec make(Family f, int n) {
    FamilySpec s;
    s.family = f;
    s.n = n;
    return s;
  }
};

/// Throws InvalidFamilySpec when the parameters violate the family's rules.
Digraph build(const FamilySpec& spec);

/// TT_n: arc (i, j) for every i < j, so vertex i has out-degree n-1-i.
Digraph transitive_tournament(int n);
/// Both arcs between every pair.
Digraph complete_digraph(int n);
/// R(S) on Z_n: arc (x, y) iff (y - x) mod n is in S.
Digraph rotational_tournament(int n, const std::vector<int>& symbols);
/// Arcs from each parent to its children; vertex 0 must be the root.
Digraph rooted_tree(const std::vector<std::vector<Vertex>>& children);

/// Forward arcs (i < j) kept independently with probability p.
Digraph random_dag(int n, double p, std::uint64_t seed);
/// Every ordered pair kept independently with probability p (may be cyclic).
Digraph random_digraph(int n, double p, std::uint64_t seed);
/// Uniform random recursive tree: parent of i is drawn from 0..i-1.
Digraph random_rooted_tree(int n, std::uint64_t seed);

/// Checks the rotational symbol-set rules; returns the reason on failure.
std::optional<std::string> rotational_spec_error(int n, const std::vector<int>& symbols);

/// Small fixed instances used by the test suites and the verify command.
/// Three sources feed vertex 3, which feeds 4, which fans out to 5, 6, 7.
Digraph bowtie_graph();
/// Arcs 0->1, 0->2, 1->2, 3->2.
Digraph converging_graph();
/// Six-vertex DAG whose brushing number rises when layered_six_arc() is
/// deleted.
Digraph layered_six_graph();
Arc layered_six_arc();

/// Deterministic uniform double in [0, 1) from a 64-bit engine, independent
/// of the standard library's distribution implementations.
class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed);
  double next();
  std::uint64_t next_u64();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace dibrush
