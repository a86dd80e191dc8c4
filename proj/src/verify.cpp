#include "dibrush/verify.hpp"

#include <algorithm>
#include <string>

#include "dibrush/bounds.hpp"
#include "dibrush/error.hpp"
#include "dibrush/families.hpp"
#include "dibrush/solver.hpp"
#include "dibrush/strategies.hpp"

namespace dibrush {

namespace {

std::string str(int x) { return std::to_string(x); }

class Suites {
 public:
  explicit Suites(const VerifyOptions& opts) : opts_(opts) {
    solve_opts_.workers = opts.workers;
    solve_opts_.cap = kHardSolverCap;
  }

  std::vector<VerifyRow> theorems() {
    const int k = opts_.max_n;
    for (int n = 3; n <= std::min(k, 8); ++n) {
      const int want = n * n / 4;
      const int exact = solve(transitive_tournament(n));
      const int strat = validated_total(transitive_tournament(n), strategy_transitive(n));
      add("transitive n=" + str(n), str(want), "exact=" + str(exact) + " strategy=" + str(strat),
          exact == want && strat == want);
    }
    for (int n = 2; n <= std::min(k, 5); ++n) {
      const int want = n * (n - 1) / 2;
      const int exact = solve(complete_digraph(n));
      add("complete n=" + str(n), str(want), str(exact), exact == want);
    }
    for (int n : {3, 5, 7}) {
      if (n > k) break;
      std::vector<int> symbols;
      for (int s = 1; s <= (n - 1) / 2; ++s) symbols.push_back(s);
      const int want = (n * n - 1) / 8;
      const int exact = solve(rotational_tournament(n, symbols));
      add("rotational n=" + str(n), str(want), str(exact), exact == want);
    }
    for (int n = 2; n <= std::min(k, 8); ++n) {
      const Digraph t = random_rooted_tree(n, next_seed());
      int leaves = 0;
      for (Vertex v = 0; v < n; ++v) leaves += t.out_degree(v) == 0 ? 1 : 0;
      const int exact = solve(t);
      const int strat = validated_total(t, strategy_rooted_tree(t));
      const int dual = tree_duality_bound(t);
      add("rooted tree n=" + str(n), "leaves=" + str(leaves),
          "exact=" + str(exact) + " strategy=" + str(strat) + " duality=" + str(dual),
          exact == leaves && strat == leaves && dual == leaves);
    }
    if (k >= 4) add_value("converging graph", converging_graph(), 3);
    if (k >= 6) {
      add_value("layered six", layered_six_graph(), 3);
      add_value("layered six minus arc", remove_arc(layered_six_graph(), layered_six_arc()), 5);
    }
    if (k >= 8) add_value("bowtie", bowtie_graph(), 3);
    for (int n = 4; n <= std::min(k, 6); ++n) tt_minus_arc_row(n);
    for (int i = 0; i < 10 && k >= 2; ++i) {
      const Digraph g = random_dag(pick(2, std::min(k, 6)), 0.4, next_seed());
      const int a = solve(g);
      const int b = solve(transpose(g));
      add("transpose dag #" + str(i) + " n=" + str(g.order()), str(a), str(b), a == b);
    }
    for (int i = 0; i < 10 && k >= 2; ++i) decomposition_row(i, random_dag(pick(2, k), 0.4, next_seed()));
    for (int i = 0; i < 10 && k >= 4; ++i) {
      const Digraph g = random_dag(pick(4, k), 0.5, next_seed());
      const int n = g.order();
      const int total = validated_total(g, strategy_dag_recursive(g));
      add("dag recursive #" + str(i) + " n=" + str(n), "<= " + str(n * n / 4), str(total),
          total <= n * n / 4);
    }
    for (int n = 3; n <= k; ++n) {
      const CleaningTrace trace = run(transitive_tournament(n), strategy_transitive(n));
      std::size_t longest = 0;
      for (const auto& p : trace.brush_paths) longest = std::max(longest, p.size());
      add("hamiltonian brush n=" + str(n), str(n), str(static_cast<int>(longest)),
          static_cast<int>(longest) == n);
    }
    for (int n : {3, 5}) {
      if (n > k) break;
      const ConjectureReport r = conjecture_explorer(n, solve_opts_);
      add("regular tournaments n=" + str(n), "<= " + str(r.bound), str(r.max_value), r.holds);
    }
    return std::move(rows_);
  }

  std::vector<VerifyRow> oracle() {
    const int k = std::min(opts_.max_n, 5);
    auto check = [&](const std::string& name, const Digraph& g) {
      const int exact = solve(g);
      const int brute = brushing_number_bruteforce(g);
      add(name, "brute=" + str(brute), "exact=" + str(exact), exact == brute);
    };
    for (int n = 3; n <= k; ++n) check("transitive n=" + str(n), transitive_tournament(n));
    for (int n = 2; n <= k; ++n) check("complete n=" + str(n), complete_digraph(n));
    if (k >= 3) check("rotational n=3", rotational_tournament(3, {1}));
    if (k >= 5) check("rotational n=5", rotational_tournament(5, {1, 2}));
    if (k >= 4) check("converging graph", converging_graph());
    for (int n = 1; n <= std::min(k, 4); ++n) {
      int agree = 0;
      const int count = 20;
      for (int i = 0; i < count; ++i) {
        const Digraph g = random_digraph(n, 0.4, next_seed());
        agree += solve(g) == brushing_number_bruteforce(g) ? 1 : 0;
      }
      add("random digraphs n=" + str(n), str(count) + " agree", str(agree) + " agree",
          agree == count);
    }
    return std::move(rows_);
  }

  std::vector<VerifyRow> transposes() {
    for (int i = 0; i < 20 && opts_.max_n >= 1; ++i) {
      const Digraph g = random_dag(pick(1, opts_.max_n), 0.4, next_seed());
      const int a = solve(g);
      const int b = solve(transpose(g));
      const int via_plan =
          validated_total(transpose(g), transpose_plan(g, run(g, brushing_number_exact(g, solve_opts_).witness)));
      add("dag #" + str(i) + " n=" + str(g.order()), "B(G)=" + str(a),
          "B(GT)=" + str(b) + " mirrored plan=" + str(via_plan), a == b && via_plan == a);
    }
    return std::move(rows_);
  }

 private:
  int solve(const Digraph& g) { return brushing_number_exact(g, solve_opts_).value; }

  static int validated_total(const Digraph& g, const BrushPlan& plan) {
    run(g, plan);
    return plan.total();
  }

  void add(std::string name, std::string expected, std::string computed, bool pass) {
    rows_.push_back({std::move(name), std::move(expected), std::move(computed), pass});
  }

  void add_value(const std::string& name, const Digraph& g, int want) {
    const int got = solve(g);
    add(name, str(want), str(got), got == want);
  }

  void tt_minus_arc_row(int n) {
    const Digraph tt = transitive_tournament(n);
    const int full = n * n / 4;
    bool ok = true;
    int strict = 0;
    for (const Arc& e : tt.arcs()) {
      const Digraph g = remove_arc(tt, e);
      const TtMinusArcCase c = tt_minus_arc_case(n, e);
      const int exact = solve(g);
      const int plan = validated_total(g, strategy_tt_minus_arc(n, e));
      const int want = is_strict_case(c) ? full - 1 : full;
      strict += exact < full ? 1 : 0;
      ok = ok && plan == want && exact <= full && (exact < full) == is_strict_case(c);
    }
    add("transitive n=" + str(n) + " minus one arc", "strict only in I, II, VII, VIII",
        str(strict) + " strict arcs", ok);
  }

  void decomposition_row(int i, const Digraph& g) {
    const PathDecomposition m = perfect_decomposition(g);
    const int r = static_cast<int>(m.paths.size());
    int isolated = 0;
    for (Vertex v = 0; v < g.order(); ++v) isolated += g.is_isolated(v) ? 1 : 0;
    const int total = validated_total(g, plan_from_paths(g, m));
    bool ok = r == pn_lower_bound(g) && total == r + isolated;
    std::string computed = "r=" + str(r) + " plan=" + str(total);
    if (g.order() <= 6) {
      const int exact = solve(g);
      ok = ok && exact <= total;
      computed += " exact=" + str(exact);
    }
    add("path decomposition #" + str(i) + " n=" + str(g.order()),
        "r=" + str(pn_lower_bound(g)), computed, ok);
  }

  std::uint64_t next_seed() { return opts_.seed * 1000003ULL + counter_++; }

  int pick(int lo, int hi) {
    if (hi <= lo) return lo;
    UnitRng rng(next_seed());
    return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  VerifyOptions opts_;
  SolveOptions solve_opts_;
  std::vector<VerifyRow> rows_;
  std::uint64_t counter_ = 0;
};

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "theorems") return Suite::Theorems;
  if (name == "oracle") return Suite::Oracle;
  if (name == "transpose") return Suite::Transpose;
  return std::nullopt;
}

std::vector<VerifyRow> run_suite(Suite suite, const VerifyOptions& opts) {
  if (opts.max_n > kDefaultSolverCap) {
    throw TooLarge("--max-n " + std::to_string(opts.max_n) + " exceeds the solver cap " +
                   std::to_string(kDefaultSolverCap));
  }
  Suites s(opts);
  switch (suite) {
    case Suite::Theorems: return s.theorems();
    case Suite::Oracle: return s.oracle();
    case Suite::Transpose: return s.transposes();
  }
  return {};
}

}  // namespace dibrush
