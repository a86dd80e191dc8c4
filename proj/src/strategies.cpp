#include "dibrush/strategies.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "dibrush/bounds.hpp"
#include "dibrush/error.hpp"
#include "dibrush/families.hpp"
#include "dibrush/solver.hpp"

namespace dibrush {

namespace {

std::string arc_text(Arc e) {
  return "(" + std::to_string(e.tail) + ", " + std::to_string(e.head) + ")";
}

std::vector<Vertex> identity_order(int n) {
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  return order;
}

void sort_flows(std::vector<ArcFlow>& flows) {
  std::sort(flows.begin(), flows.end(), [](const ArcFlow& a, const ArcFlow& b) {
    return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
  });
}

// Moves a plan for `canonical` onto relabel(canonical, perm). Flows are
// taken from a run on the canonical graph so the dispersal does not depend
// on labels.
BrushPlan carry_plan(const Digraph& canonical, const BrushPlan& plan,
                     const std::vector<Vertex>& perm) {
  const CleaningTrace trace = run(canonical, plan);
  BrushPlan out;
  out.initial.resize(plan.initial.size());
  for (std::size_t v = 0; v < plan.initial.size(); ++v) out.initial[perm[v]] = plan.initial[v];
  for (Vertex v : plan.order) out.order.push_back(perm[v]);
  std::vector<ArcFlow> flows;
  for (const ArcFlow& f : trace.flows) flows.push_back({perm[f.tail], perm[f.head], f.flow});
  sort_flows(flows);
  out.flows = std::move(flows);
  return out;
}

// perm[k] is the vertex of g playing v_k of TT_n.
std::optional<std::vector<Vertex>> tt_labelling(const Digraph& g) {
  if (g.order() < 3 || !is_tournament(g)) return std::nullopt;
  auto topo = topological_order(g);
  if (!topo) return std::nullopt;
  return topo;
}

struct MissingArc {
  std::vector<Vertex> perm;
  Arc e;  // in TT_n labels
};

std::optional<MissingArc> tt_minus_arc_labelling(const Digraph& g) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(g.size()) != n * (n - 1) / 2 - 1 || !is_acyclic(g)) {
    return std::nullopt;
  }
  std::optional<std::pair<Vertex, Vertex>> gap;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.has_arc(x, y) && g.has_arc(y, x)) return std::nullopt;
      if (!g.has_arc(x, y) && !g.has_arc(y, x)) {
        if (gap) return std::nullopt;
        gap = {x, y};
      }
    }
  }
  if (!gap) return std::nullopt;
  for (const Arc added : {Arc{gap->first, gap->second}, Arc{gap->second, gap->first}}) {
    std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
    arcs.push_back(added);
    auto perm = tt_labelling(Digraph(n, arcs));
    if (!perm) continue;
    std::vector<Vertex> pos(n);
    for (int k = 0; k < n; ++k) pos[(*perm)[k]] = k;
    return MissingArc{*perm, {pos[added.tail], pos[added.head]}};
  }
  return std::nullopt;
}

bool is_complete(const Digraph& g) {
  const std::size_t n = g.order();
  return n >= 1 && g.size() == n * (n - 1);
}

struct RotationalLabelling {
  std::vector<Vertex> perm;  // perm[k] is the vertex of g playing v_k
  std::vector<int> symbols;
};

// Searches for labels in Z_n under which g is a rotational tournament:
// label differences along arcs must form a consistent symbol set.
std::optional<RotationalLabelling> rotational_labelling(const Digraph& g) {
  const int n = g.order();
  if (n < 3 || n % 2 == 0 || !is_tournament(g)) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.out_degree(v) != (n - 1) / 2) return std::nullopt;
  }
  std::vector<int> label(n, -1);
  std::vector<Vertex> at(n, -1);
  std::vector<int> in_symbols(n, -1);  // per difference: -1 unknown, 1 in S, 0 not
  std::vector<std::pair<int, int>> trail;
  label[0] = 0;
  at[0] = 0;

  auto fits = [&](Vertex v, int lv) {
    trail.clear();
    for (Vertex u = 0; u < n; ++u) {
      if (label[u] < 0) continue;
      const int d = ((lv - label[u]) % n + n) % n;  // u -> v has difference d
      const int want = g.has_arc(u, v) ? 1 : 0;
      if (in_symbols[d] == -1) {
        in_symbols[d] = want;
        in_symbols[n - d] = 1 - want;
        trail.push_back({d, n - d});
      } else if (in_symbols[d] != want) {
        return false;
      }
    }
    return true;
  };
  auto undo = [&](const std::vector<std::pair<int, int>>& marks) {
    for (auto [a, b] : marks) in_symbols[a] = in_symbols[b] = -1;
  };

  std::function<bool(Vertex)> place = [&](Vertex v) -> bool {
    if (v == n) return true;
    for (int lv = 1; lv < n; ++lv) {
      if (at[lv] >= 0) continue;
      const bool ok = fits(v, lv);
      const auto marks = trail;
      if (ok) {
        label[v] = lv;
        at[lv] = v;
        if (place(v + 1)) return true;
        label[v] = -1;
        at[lv] = -1;
      }
      undo(marks);
    }
    return false;
  };
  if (!place(1)) return std::nullopt;

  // Scaling labels by a unit of Z_n gives another valid labelling; keep the
  // one whose symbol set needs the fewest brushes.
  std::optional<RotationalLabelling> best;
  int best_total = 0;
  for (int m = 1; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    RotationalLabelling cand;
    cand.perm.assign(n, 0);
    for (int k = 0; k < n; ++k) cand.perm[(k * m) % n] = at[k];
    for (int d = 1; d < n; ++d) {
      if (in_symbols[d] == 1) cand.symbols.push_back((d * m) % n);
    }
    std::sort(cand.symbols.begin(), cand.symbols.end());
    const int total = strategy_rotational(n, cand.symbols).total();
    if (!best || total < best_total) {
      best = std::move(cand);
      best_total = total;
    }
  }
  return best;
}

BrushPlan build_plan(const Digraph& g, Method m) {
  auto refuse = [&](const std::string& why) -> BrushPlan {
    throw MethodNotApplicable(method_name(m) + ": " + why);
  };
  switch (m) {
    case Method::TT: {
      auto perm = tt_labelling(g);
      if (!perm) return refuse("not a transitive tournament on at least 3 vertices");
      return carry_plan(transitive_tournament(g.order()), strategy_transitive(g.order()), *perm);
    }
    case Method::TTMinusArc: {
      auto found = tt_minus_arc_labelling(g);
      if (!found) return refuse("not a transitive tournament minus one arc");
      const int n = g.order();
      return carry_plan(remove_arc(transitive_tournament(n), found->e),
                        strategy_tt_minus_arc(n, found->e), found->perm);
    }
    case Method::Complete:
      if (!is_complete(g)) return refuse("not a complete digraph");
      return strategy_complete(g.order());
    case Method::Rotational: {
      auto found = rotational_labelling(g);
      if (!found) return refuse("not a rotational tournament");
      const int n = g.order();
      return carry_plan(rotational_tournament(n, found->symbols),
                        strategy_rotational(n, found->symbols), found->perm);
    }
    case Method::Tree:
      if (!rooted_tree_root(g)) return refuse("not a rooted tree");
      return strategy_rooted_tree(g);
    case Method::DagRecursive:
      if (!is_acyclic(g)) return refuse("digraph has a cycle");
      return strategy_dag_recursive(g);
    case Method::PathDecomp:
      if (!is_acyclic(g)) return refuse("digraph has a cycle");
      return plan_from_paths(g, perfect_decomposition(g));
    case Method::Auto:
      break;
  }
  return refuse("no strategy applies");
}

constexpr std::array<Method, 5> kFamilyMethods = {Method::TT, Method::TTMinusArc, Method::Complete,
                                                  Method::Rotational, Method::Tree};

}  // namespace

std::vector<Vertex> level_order(const Digraph& g) {
  auto topo = topological_order(g);
  if (!topo) throw NotAcyclic("level order needs an acyclic digraph");
  std::vector<int> level(g.order(), 0);
  for (Vertex v : *topo) {
    for (Vertex w : g.out_neighbors(v)) level[w] = std::max(level[w], level[v] + 1);
  }
  std::vector<Vertex> order = identity_order(g.order());
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return level[a] < level[b]; });
  return order;
}

BrushPlan trivial_plan(const Digraph& g) {
  BrushPlan plan;
  for (Vertex v = 0; v < g.order(); ++v) plan.initial.push_back(firing_threshold(g, v));
  plan.order = identity_order(g.order());
  return plan;
}

BrushPlan strategy_transitive(int n) {
  if (n < 3) throw BadSize("transitive strategy needs n >= 3, got " + std::to_string(n));
  BrushPlan plan;
  plan.initial.assign(n, 0);
  for (int k = 1; k <= n / 2; ++k) plan.initial[k - 1] = n - (2 * k - 1);
  plan.order = identity_order(n);
  return plan;
}

TtMinusArcCase tt_minus_arc_case(int n, Arc e) {
  if (n < 3) throw BadSize("arc deletion cases need n >= 3, got " + std::to_string(n));
  if (e.tail < 0 || e.head >= n || e.tail >= e.head) {
    throw NotAnArc(arc_text(e) + " is not an arc of TT_" + std::to_string(n));
  }
  const int l = n / 2;
  const int a = e.tail + 1;
  const int b = e.head + 1;
  const bool odd = n % 2 == 1;
  if (a < l) {
    if (b > l + 1) return TtMinusArcCase::I;
    if (b == l + 1) return odd ? TtMinusArcCase::III : TtMinusArcCase::II;
    return TtMinusArcCase::IV;
  }
  if (a == l) {
    if (b == l + 1) return odd ? TtMinusArcCase::VI : TtMinusArcCase::VII;
    return TtMinusArcCase::VIII;
  }
  return TtMinusArcCase::V;
}

bool is_strict_case(TtMinusArcCase c) {
  return c == TtMinusArcCase::I || c == TtMinusArcCase::II || c == TtMinusArcCase::VII ||
         c == TtMinusArcCase::VIII;
}

std::string case_name(TtMinusArcCase c) {
  static const std::array<const char*, 8> names = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"};
  return names[static_cast<int>(c)];
}

BrushPlan strategy_tt_minus_arc(int n, Arc e) {
  const TtMinusArcCase c = tt_minus_arc_case(n, e);
  BrushPlan plan = strategy_transitive(n);
  const int l = n / 2;
  auto& b0 = plan.initial;
  switch (c) {
    case TtMinusArcCase::I:
    case TtMinusArcCase::II:
    case TtMinusArcCase::VII:
    case TtMinusArcCase::VIII:
      --b0[e.tail];
      break;
    case TtMinusArcCase::III:
    case TtMinusArcCase::VI:
      --b0[e.tail];
      ++b0[l];  // v_{l+1}
      break;
    case TtMinusArcCase::IV:
      --b0[e.tail];
      ++b0[e.head];
      break;
    case TtMinusArcCase::V:
      break;
  }
  return plan;
}

BrushPlan strategy_complete(int n) {
  if (n < 1) throw BadSize("complete digraph needs n >= 1");
  BrushPlan plan;
  for (int i = 0; i < n; ++i) plan.initial.push_back(n - 1 - i);
  if (n == 1) plan.initial[0] = 1;
  plan.order = identity_order(n);
  return plan;
}

std::optional<Vertex> rooted_tree_root(const Digraph& g) {
  const int n = g.order();
  if (n == 0 || static_cast<int>(g.size()) != n - 1) return std::nullopt;
  std::optional<Vertex> root;
  for (Vertex v = 0; v < n; ++v) {
    if (g.in_degree(v) == 0) {
      if (root) return std::nullopt;
      root = v;
    } else if (g.in_degree(v) != 1) {
      return std::nullopt;
    }
  }
  if (!root || !is_acyclic(g)) return std::nullopt;
  return root;
}

BrushPlan strategy_rooted_tree(const Digraph& t) {
  const auto root = rooted_tree_root(t);
  if (!root) throw NotRootedTree("needs one root and every other vertex with one parent");
  const std::vector<Vertex> topo = *topological_order(t);
  std::vector<int> leaves(t.order(), 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const Vertex v = *it;
    if (t.out_degree(v) == 0) leaves[v] = 1;
    for (Vertex w : t.out_neighbors(v)) leaves[v] += leaves[w];
  }
  BrushPlan plan;
  plan.initial.assign(t.order(), 0);
  plan.initial[*root] = leaves[*root];
  plan.order = topo;
  std::vector<ArcFlow> flows;
  for (const Arc& a : t.arcs()) flows.push_back({a.tail, a.head, leaves[a.head]});
  plan.flows = std::move(flows);
  return plan;
}

BrushPlan strategy_rotational(int n, const std::vector<int>& symbols) {
  if (auto err = rotational_spec_error(n, symbols)) throw InvalidFamilySpec(*err);
  const int m = (n - 1) / 2;
  BrushPlan plan;
  for (int k = 1; k <= n; ++k) {
    const int before = static_cast<int>(
        std::count_if(symbols.begin(), symbols.end(), [k](int s) { return s < k; }));
    plan.initial.push_back(std::max(0, m - before));
  }
  if (n == 1) plan.initial[0] = 1;
  plan.order = identity_order(n);
  return plan;
}

BrushPlan strategy_dag_recursive(const Digraph& g) {
  if (!is_acyclic(g)) throw NotAcyclic("recursive construction needs a DAG");
  const int n = g.order();
  if (n <= 5) return brushing_number_exact(g).witness;

  Vertex u = -1;
  Vertex v = -1;
  for (Vertex x = 0; x < n && u < 0; ++x) {
    if (g.in_degree(x) == 0) u = x;
  }
  for (Vertex x = 0; x < n && v < 0; ++x) {
    if (x != u && g.out_degree(x) == 0) v = x;
  }
  if (u < 0 || v < 0) throw NotAcyclic("no source/sink pair");

  std::vector<Vertex> keep;
  for (Vertex x = 0; x < n; ++x) {
    if (x != u && x != v) keep.push_back(x);
  }
  const BrushPlan sub = strategy_dag_recursive(induced_subgraph(g, keep));

  BrushPlan plan;
  plan.initial.assign(n, 0);
  std::vector<int> flow(g.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) plan.initial[keep[i]] = sub.initial[i];
  for (const ArcFlow& f : *sub.flows) flow[*g.arc_index(keep[f.tail], keep[f.head])] = f.flow;

  // X = N+(u) & N-(v); Y1 = rest of N+(u); Y2 = rest of N-(v).
  for (Vertex w : g.out_neighbors(u)) {
    ++plan.initial[u];
    flow[*g.arc_index(u, w)] = 1;
  }
  for (Vertex w : g.in_neighbors(v)) {
    flow[*g.arc_index(w, v)] = 1;
    if (w != u && !g.has_arc(u, w)) ++plan.initial[w];
  }
  if (g.is_isolated(u)) plan.initial[u] = 1;
  if (g.is_isolated(v)) plan.initial[v] = 1;

  plan.order.push_back(u);
  for (Vertex x : sub.order) plan.order.push_back(keep[x]);
  plan.order.push_back(v);
  std::vector<ArcFlow> flows;
  for (std::size_t i = 0; i < g.size(); ++i) {
    flows.push_back({g.arcs()[i].tail, g.arcs()[i].head, flow[i]});
  }
  plan.flows = std::move(flows);
  return plan;
}

PathDecomposition perfect_decomposition(const Digraph& g) {
  if (!is_acyclic(g)) throw NotAcyclic("perfect decomposition needs a DAG");
  // next[i] is the arc that continues arc i through its head.
  std::vector<std::optional<std::size_t>> next(g.size());
  std::vector<std::size_t> starts;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto ins = g.in_neighbors(v);
    const std::size_t outs = g.out_degree(v);
    const std::size_t paired = std::min(ins.size(), outs);
    for (std::size_t k = 0; k < paired; ++k) next[*g.arc_index(ins[k], v)] = g.out_arc_index(v, k);
    for (std::size_t k = paired; k < outs; ++k) starts.push_back(g.out_arc_index(v, k));
  }
  PathDecomposition m;
  for (std::size_t arc : starts) {
    std::vector<Vertex> path{g.arcs()[arc].tail};
    for (std::optional<std::size_t> cur = arc; cur; cur = next[*cur]) {
      path.push_back(g.arcs()[*cur].head);
    }
    m.paths.push_back(std::move(path));
  }
  m.excess = excess_vector(g);
  return m;
}

BrushPlan plan_from_paths(const Digraph& g, const PathDecomposition& m) {
  if (!is_acyclic(g)) throw NotAcyclic("path plans need a DAG");
  std::vector<bool> used(g.size(), false);
  BrushPlan plan;
  plan.initial.assign(g.order(), 0);
  for (const auto& path : m.paths) {
    if (path.size() < 2) throw NotADecomposition("path with no arcs");
    for (Vertex v : path) {
      if (v < 0 || v >= g.order()) throw NotADecomposition("vertex out of range");
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const Arc a{path[k], path[k + 1]};
      auto idx = g.arc_index(a.tail, a.head);
      if (!idx) throw NotADecomposition(arc_text(a) + " is not an arc");
      if (used[*idx]) throw NotADecomposition(arc_text(a) + " used twice");
      used[*idx] = true;
    }
    ++plan.initial[path.front()];
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!used[i]) throw NotADecomposition(arc_text(g.arcs()[i]) + " not covered");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.is_isolated(v)) plan.initial[v] = 1;
  }
  plan.order = level_order(g);
  std::vector<ArcFlow> flows;
  for (const Arc& a : g.arcs()) flows.push_back({a.tail, a.head, 1});
  plan.flows = std::move(flows);
  return plan;
}

BrushPlan transpose_plan(const Digraph& g, const CleaningTrace& trace) {
  if (trace.steps.empty() || trace.flows.size() != g.size() ||
      static_cast<int>(trace.final_brushes().size()) != g.order() || !trace.complete(g)) {
    throw IncompleteTrace("trace does not clean the whole digraph");
  }
  const Digraph gt = transpose(g);
  BrushPlan plan;
  plan.initial = trace.final_brushes();
  plan.order = level_order(gt);
  std::vector<ArcFlow> flows;
  for (const ArcFlow& f : trace.flows) flows.push_back({f.head, f.tail, f.flow});
  sort_flows(flows);
  plan.flows = std::move(flows);
  return plan;
}

std::optional<Method> parse_method(std::string_view name) {
  static const std::map<std::string_view, Method> table = {
      {"auto", Method::Auto},
      {"tt", Method::TT},
      {"tt-minus-arc", Method::TTMinusArc},
      {"complete", Method::Complete},
      {"rotational", Method::Rotational},
      {"tree", Method::Tree},
      {"dag-recursive", Method::DagRecursive},
      {"path-decomp", Method::PathDecomp},
  };
  if (auto it = table.find(name); it != table.end()) return it->second;
  return std::nullopt;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::TT: return "tt";
    case Method::TTMinusArc: return "tt-minus-arc";
    case Method::Complete: return "complete";
    case Method::Rotational: return "rotational";
    case Method::Tree: return "tree";
    case Method::DagRecursive: return "dag-recursive";
    case Method::PathDecomp: return "path-decomp";
  }
  return "unknown";
}

StrategyResult apply_strategy(const Digraph& g, Method m) {
  if (m == Method::Auto) {
    for (Method candidate : kFamilyMethods) {
      try {
        return apply_strategy(g, candidate);
      } catch (const MethodNotApplicable&) {
      }
    }
    if (!is_acyclic(g)) throw MethodNotApplicable("auto: no family matches and the digraph is cyclic");
    return apply_strategy(g, Method::DagRecursive);
  }
  StrategyResult result;
  result.method = m;
  result.plan = build_plan(g, m);
  run(g, result.plan);
  result.total = result.plan.total();
  return result;
}

StrategyResult best_strategy_plan(const Digraph& g) {
  StrategyResult best;
  best.plan = trivial_plan(g);
  best.total = best.plan.total();
  std::vector<Method> methods(kFamilyMethods.begin(), kFamilyMethods.end());
  if (is_acyclic(g)) {
    methods.push_back(Method::PathDecomp);
    if (g.order() > 5) methods.push_back(Method::DagRecursive);
  }
  for (Method m : methods) {
    try {
      StrategyResult r = apply_strategy(g, m);
      if (r.total < best.total) best = std::move(r);
    } catch (const MethodNotApplicable&) {
    }
  }
  return best;
}

}  // namespace dibrush
