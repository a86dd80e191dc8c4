#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dibrush/digraph.hpp"
#include "dibrush/engine.hpp"

namespace dibrush {

struct PathDecomposition {
  std::vector<std::vector<Vertex>> paths;
  std::vector<int> excess;  // deg+(v) - deg-(v)
};

/// Quarter-square plan for TT_n: initial(v_k) = n - (2k - 1) for k <= floor(n/2).
/// Throws BadSize for n < 3.
BrushPlan strategy_transitive(int n);

enum class TtMinusArcCase { I, II, III, IV, V, VI, VII, VIII };

/// Case of the arc-deletion argument for arc e = (a, b), a < b, of TT_n.
/// Throws NotAnArc.
TtMinusArcCase tt_minus_arc_case(int n, Arc e);

/// Cases whose plan uses one brush fewer than floor(n^2/4).
bool is_strict_case(TtMinusArcCase c);

std::string case_name(TtMinusArcCase c);

/// Plan for TT_n - e with firing order 0..n-1. Throws NotAnArc.
BrushPlan strategy_tt_minus_arc(int n, Arc e);

/// initial(v_i) = n - 1 - i; a single vertex gets one brush.
BrushPlan strategy_complete(int n);

/// Root of a rooted out-tree, if g is one.
std::optional<Vertex> rooted_tree_root(const Digraph& g);

/// Leaf count at the root; explicit flows carry one brush per leaf below
/// each arc. Throws NotRootedTree.
BrushPlan strategy_rooted_tree(const Digraph& t);

/// initial(v_k) = max(0, (n-1)/2 - |{s in S : s < k}|), order 0..n-1.
/// Throws InvalidFamilySpec.
BrushPlan strategy_rotational(int n, const std::vector<int>& symbols);

/// Source/sink recursion with the exact solver below six vertices. Plans
/// carry explicit flows. Throws NotAcyclic.
BrushPlan strategy_dag_recursive(const Digraph& g);

/// Pairs in-arcs with out-arcs at every vertex, lowest index first.
/// Throws NotAcyclic.
PathDecomposition perfect_decomposition(const Digraph& g);

/// One brush per path, started at the path's first vertex, plus one brush
/// per isolated vertex. Throws NotADecomposition or NotAcyclic.
BrushPlan plan_from_paths(const Digraph& g, const PathDecomposition& m);

/// Plan for transpose(g) that starts from the trace's final configuration
/// and sends every brush back along its arcs. Throws IncompleteTrace or
/// NotAcyclic.
BrushPlan transpose_plan(const Digraph& g, const CleaningTrace& trace);

/// Vertices sorted by (longest distance from an in-degree-0 vertex, index).
/// Throws NotAcyclic.
std::vector<Vertex> level_order(const Digraph& g);

enum class Method { Auto, TT, TTMinusArc, Complete, Rotational, Tree, DagRecursive, PathDecomp };

/// nullopt for an unknown name.
std::optional<Method> parse_method(std::string_view name);
std::string method_name(Method m);

struct StrategyResult {
  Method method = Method::Auto;  // the method that produced the plan
  BrushPlan plan;
  int total = 0;
};

/// Builds the plan for g with the given method, relabelling family members
/// when needed, and validates it with the engine. Auto tries the family
/// methods first and falls back to dag-recursive for DAGs. Throws
/// MethodNotApplicable.
StrategyResult apply_strategy(const Digraph& g, Method m);

/// Smallest-total validated plan among the applicable strategies; the
/// threshold-everywhere plan when none applies.
StrategyResult best_strategy_plan(const Digraph& g);

/// initial = firing threshold at every vertex, order 0..n-1.
BrushPlan trivial_plan(const Digraph& g);

}  // namespace dibrush
