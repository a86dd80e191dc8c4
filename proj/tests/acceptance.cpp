// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dibrush/bounds.hpp"
#include "dibrush/engine.hpp"
#include "dibrush/families.hpp"
#include "dibrush/solver.hpp"
#include "dibrush/strategies.hpp"

using namespace dibrush;

namespace {

constexpr std::uint64_t kSeed = 20240611;

int exact(const Digraph& g) { return brushing_number_exact(g).value; }

int validated_total(const Digraph& g, const BrushPlan& plan) {
  const CleaningTrace trace = run(g, plan);
  return trace.complete(g) ? trace.total : -1;
}

int isolated_count(const Digraph& g) {
  int k = 0;
  for (Vertex v = 0; v < g.order(); ++v) k += g.is_isolated(v) ? 1 : 0;
  return k;
}

int leaf_count(const Digraph& t) {
  int k = 0;
  for (Vertex v = 0; v < t.order(); ++v) k += t.out_degree(v) == 0 ? 1 : 0;
  return k;
}

int pick(UnitRng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::vector<int> consecutive(int n) {
  std::vector<int> s;
  for (int k = 1; k <= (n - 1) / 2; ++k) s.push_back(k);
  return s;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome transitive_tournaments() {
  std::ostringstream out;
  bool ok = true;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 3; n <= 8; ++n) {
    const int want = n * n / 4;
    const int value = exact(transitive_tournament(n));
    const int plan = validated_total(transitive_tournament(n), strategy_transitive(n));
    out << "n=" << n << ":" << value << "/" << plan << " ";
    ok = ok && value == want && plan == want;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << "(" << secs << " s)";
  return {ok && secs < 60.0, out.str()};
}

Outcome complete_digraphs() {
  std::ostringstream out;
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    const int value = exact(complete_digraph(n));
    out << "n=" << n << ":" << value << " ";
    ok = ok && value == n * (n - 1) / 2;
  }
  return {ok, out.str()};
}

Outcome rotational_tournaments() {
  std::ostringstream out;
  bool ok = true;
  for (int n : {3, 5, 7}) {
    const int value = exact(rotational_tournament(n, consecutive(n)));
    out << "n=" << n << ":" << value << " ";
    ok = ok && value == (n * n - 1) / 8;
  }
  const int other = exact(rotational_tournament(7, {1, 2, 4}));
  out << "| n=7 S={1,2,4}: B=" << other << (other == 6 ? " (equals 6)" : " (differs from 6)");
  return {ok, out.str()};
}

Outcome rooted_trees() {
  UnitRng rng(kSeed + 4);
  int exact_ok = 0;
  for (int i = 0; i < 25; ++i) {
    const Digraph t = random_rooted_tree(pick(rng, 1, 8), rng.below(1u << 30));
    exact_ok += exact(t) == leaf_count(t) ? 1 : 0;
  }
  int strat_ok = 0;
  int strat_total = 0;
  for (int n = 2; n <= 14; ++n) {
    for (int i = 0; i < 5; ++i) {
      const Digraph t = random_rooted_tree(n, rng.below(1u << 30));
      const int leaves = leaf_count(t);
      strat_ok += validated_total(t, strategy_rooted_tree(t)) == leaves && tree_duality_bound(t) == leaves;
      ++strat_total;
    }
  }
  std::ostringstream out;
  out << "exact=leaves " << exact_ok << "/25, strategy=duality=leaves " << strat_ok << "/" << strat_total;
  return {exact_ok == 25 && strat_ok == strat_total, out.str()};
}

Outcome named_graphs() {
  const int a = exact(bowtie_graph());
  const int b = exact(converging_graph());
  const int c = exact(layered_six_graph());
  const int d = exact(remove_arc(layered_six_graph(), layered_six_arc()));
  std::ostringstream out;
  out << "bowtie " << a << ", converging " << b << ", layered six " << c << ", minus arc " << d;
  return {a == 3 && b == 3 && c == 3 && d == 5, out.str()};
}

Outcome tt_arc_deletion() {
  std::ostringstream out;
  bool ok = true;
  for (int n = 4; n <= 6; ++n) {
    const Digraph tt = transitive_tournament(n);
    const int full = exact(tt);
    int strict = 0;
    for (const Arc& e : tt.arcs()) {
      const Digraph g = remove_arc(tt, e);
      const TtMinusArcCase c = tt_minus_arc_case(n, e);
      const int value = exact(g);
      const int plan = validated_total(g, strategy_tt_minus_arc(n, e));
      const int stated = is_strict_case(c) ? n * n / 4 - 1 : n * n / 4;
      const bool row = value <= full && (value < full) == is_strict_case(c) && plan == stated;
      if (!row) {
        out << "[n=" << n << " e=(" << e.tail << "," << e.head << ") case " << case_name(c)
            << " exact " << value << " plan " << plan << "] ";
      }
      strict += value < full ? 1 : 0;
      ok = ok && row;
    }
    out << "n=" << n << ": " << strict << "/" << tt.size() << " strict ";
  }
  return {ok, out.str()};
}

Outcome transpose_equality() {
  UnitRng rng(kSeed + 7);
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    const Digraph g = random_dag(pick(rng, 1, 6), 0.2 + 0.5 * rng.next(), rng.below(1u << 30));
    agree += exact(g) == exact(transpose(g)) ? 1 : 0;
  }
  return {agree == 100, std::to_string(agree) + "/100 equal"};
}

Outcome decomposition_chain() {
  UnitRng rng(kSeed + 8);
  int ok = 0;
  int with_isolated = 0;
  for (int i = 0; i < 100; ++i) {
    const Digraph g = random_dag(pick(rng, 1, 10), 0.2 + 0.5 * rng.next(), rng.below(1u << 30));
    const PathDecomposition m = perfect_decomposition(g);
    const int r = static_cast<int>(m.paths.size());
    const int iso = isolated_count(g);
    with_isolated += iso > 0 ? 1 : 0;
    bool row = r == pn_lower_bound(g) && validated_total(g, plan_from_paths(g, m)) == r + iso;
    if (g.order() <= 6) row = row && exact(g) <= r + iso;
    ok += row ? 1 : 0;
  }
  std::ostringstream out;
  out << ok << "/100 (" << with_isolated << " with isolated vertices, each adding one brush)";
  return {ok == 100, out.str()};
}

Outcome recursive_dag_bound() {
  UnitRng rng(kSeed + 9);
  int ok = 0;
  int worst_gap = -1000;
  for (int i = 0; i < 100; ++i) {
    const int n = pick(rng, 4, 12);
    const Digraph g = random_dag(n, 0.2 + 0.6 * rng.next(), rng.below(1u << 30));
    const int total = validated_total(g, strategy_dag_recursive(g));
    ok += total >= 0 && total <= n * n / 4 ? 1 : 0;
    worst_gap = std::max(worst_gap, total - n * n / 4);
  }
  std::ostringstream out;
  out << ok << "/100 within floor(n^2/4), max total - bound = " << worst_gap;
  return {ok == 100, out.str()};
}

Outcome oracle_agreement() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Digraph> named;
  for (int n = 3; n <= 5; ++n) named.push_back(transitive_tournament(n));
  for (int n = 2; n <= 5; ++n) named.push_back(complete_digraph(n));
  named.push_back(rotational_tournament(3, {1}));
  named.push_back(rotational_tournament(5, {1, 2}));
  for (int n = 2; n <= 5; ++n) {
    UnitRng rng(kSeed + 10 + n);
    const Digraph t = random_rooted_tree(n, rng.below(1u << 30));
    named.push_back(t);
  }
  named.push_back(converging_graph());
  int named_ok = 0;
  for (const Digraph& g : named) named_ok += exact(g) == brushing_number_bruteforce(g) ? 1 : 0;

  UnitRng rng(kSeed + 10);
  int random_ok = 0;
  for (int i = 0; i < 200; ++i) {
    const Digraph g = random_digraph(pick(rng, 1, 4), 0.15 + 0.6 * rng.next(), rng.below(1u << 30));
    random_ok += exact(g) == brushing_number_bruteforce(g) ? 1 : 0;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream out;
  out << "named " << named_ok << "/" << named.size() << ", random " << random_ok << "/200 (" << secs
      << " s)";
  return {named_ok == static_cast<int>(named.size()) && random_ok == 200 && secs < 300.0, out.str()};
}

Outcome hamiltonian_brush() {
  std::ostringstream out;
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    const CleaningTrace trace = run(transitive_tournament(n), strategy_transitive(n));
    std::size_t longest = 0;
    for (const auto& p : trace.brush_paths) longest = std::max(longest, p.size());
    out << "n=" << n << ":" << longest << " ";
    ok = ok && longest == static_cast<std::size_t>(n);
  }
  return {ok, out.str()};
}

Outcome conjecture() {
  std::ostringstream out;
  bool ok = true;
  for (int n : {3, 5}) {
    const ConjectureReport r = conjecture_explorer(n);
    out << "n=" << n << ": max B " << r.max_value << " over " << r.tournaments.size()
        << " tournaments, bound " << r.bound << " ";
    if (!r.holds) {
      std::cerr << "WARNING: conjectured bound violated at n=" << n << "\n";
      out << "VIOLATED ";
    }
    ok = ok && r.holds;
  }
  return {ok, out.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"transitive tournaments", transitive_tournaments},
      {"complete digraphs", complete_digraphs},
      {"rotational tournaments", rotational_tournaments},
      {"rooted trees", rooted_trees},
      {"named example graphs", named_graphs},
      {"arc deletion on transitive tournaments", tt_arc_deletion},
      {"transpose equality", transpose_equality},
      {"decomposition chain", decomposition_chain},
      {"recursive dag bound", recursive_dag_bound},
      {"oracle agreement", oracle_agreement},
      {"hamiltonian brush", hamiltonian_brush},
      {"regular tournament conjecture", conjecture},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
