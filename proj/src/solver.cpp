#include "dibrush/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>

#include "dibrush/bounds.hpp"
#include "dibrush/error.hpp"
#include "dibrush/floworder.hpp"
#include "dibrush/strategies.hpp"

namespace dibrush {

namespace {

using Mask = std::uint32_t;

// Per-graph data for the order search. Vertex sets are bitmasks (n <= 12).
struct SearchGraph {
  explicit SearchGraph(const Digraph& graph) : g(graph), n(graph.order()) {
    all = (Mask{1} << n) - 1;
    in_mask.assign(n, 0);
    threshold.resize(n);
    for (const Arc& a : g.arcs()) in_mask[a.head] |= Mask{1} << a.tail;
    for (Vertex v = 0; v < n; ++v) {
      threshold[v] = firing_threshold(g, v);
      if (g.out_degree(v) == 0 && g.in_degree(v) > 0) sinks |= Mask{1} << v;
      if (g.is_isolated(v)) isolated |= Mask{1} << v;
    }
  }

  // Arcs fired against the order inside the prefix, arcs from the prefix
  // into sinks, and isolated prefix vertices each end one distinct brush.
  // Brushes whose last arc leaves the suffix are counted separately: the
  // suffix needs at least its largest threshold, and at least one brush for
  // every suffix arc into the prefix or into a sink, plus each isolated
  // suffix vertex.
  int lower_bound(Mask prefix, int mandatory) const {
    const Mask rest = all & ~prefix;
    int stranded = mandatory;
    int tail_side = std::popcount(rest & isolated);
    int top = 0;
    for (Mask bits = all; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      const Mask bit = Mask{1} << v;
      if (prefix & bit) {
        tail_side += std::popcount(in_mask[v] & rest);
      } else {
        top = std::max(top, threshold[v]);
        if (sinks & bit) {
          stranded += std::popcount(in_mask[v] & prefix);
          tail_side += std::popcount(in_mask[v] & rest);
        }
      }
    }
    return stranded + std::max(top, tail_side);
  }

  // Mandatory count after appending v to the prefix.
  int extend(Mask prefix, int mandatory, Vertex v) const {
    for (Vertex w : g.out_neighbors(v)) {
      if (prefix & (Mask{1} << w)) ++mandatory;
    }
    if (sinks & (Mask{1} << v)) mandatory += std::popcount(in_mask[v] & prefix);
    if (isolated & (Mask{1} << v)) ++mandatory;
    return mandatory;
  }

  bool available(Mask prefix, Vertex v, bool topo_only) const {
    if (prefix & (Mask{1} << v)) return false;
    return !topo_only || (in_mask[v] & ~prefix) == 0;
  }

  const Digraph& g;
  int n;
  Mask all = 0;
  Mask sinks = 0;
  Mask isolated = 0;
  std::vector<Mask> in_mask;
  std::vector<int> threshold;
};

struct Shared {
  std::atomic<int> incumbent;
  std::atomic<bool> done{false};
  int global_lower = 0;
};

void lower_incumbent(Shared& shared, int value) {
  int cur = shared.incumbent.load();
  while (value < cur && !shared.incumbent.compare_exchange_weak(cur, value)) {
  }
  if (value <= shared.global_lower) shared.done = true;
}

class Worker {
 public:
  Worker(const SearchGraph& sg, const std::vector<Vertex>& child_order, bool topo_only,
         Shared& shared)
      : sg_(sg), child_order_(child_order), topo_only_(topo_only), shared_(shared) {
    order_.reserve(sg.n);
  }

  void explore_from(Vertex first) {
    order_.assign(1, first);
    descend(Mask{1} << first, sg_.extend(0, 0, first));
  }

  SolveStats stats;

 private:
  void descend(Mask prefix, int mandatory) {
    if (shared_.done.load(std::memory_order_relaxed)) return;
    if (sg_.lower_bound(prefix, mandatory) >= shared_.incumbent.load(std::memory_order_relaxed)) {
      ++stats.pruned;
      return;
    }
    if (prefix == sg_.all) {
      ++stats.orders_explored;
      lower_incumbent(shared_, min_total_for_order(sg_.g, order_));
      return;
    }
    for (Vertex v : child_order_) {
      if (!sg_.available(prefix, v, topo_only_)) continue;
      order_.push_back(v);
      descend(prefix | (Mask{1} << v), sg_.extend(prefix, mandatory, v));
      order_.pop_back();
    }
  }

  const SearchGraph& sg_;
  const std::vector<Vertex>& child_order_;
  bool topo_only_;
  Shared& shared_;
  std::vector<Vertex> order_;
};

// Lexicographically least order whose minimum total equals value.
std::optional<std::vector<Vertex>> least_optimal_order(const SearchGraph& sg, int value,
                                                       bool topo_only) {
  std::vector<Vertex> order;
  std::function<bool(Mask, int)> descend = [&](Mask prefix, int mandatory) {
    if (sg.lower_bound(prefix, mandatory) > value) return false;
    if (prefix == sg.all) return min_total_for_order(sg.g, order) == value;
    for (Vertex v = 0; v < sg.n; ++v) {
      if (!sg.available(prefix, v, topo_only)) continue;
      order.push_back(v);
      if (descend(prefix | (Mask{1} << v), sg.extend(prefix, mandatory, v))) return true;
      order.pop_back();
    }
    return false;
  };
  if (descend(0, 0)) return order;
  return std::nullopt;
}

bool order_admissible(const Digraph& g, const std::vector<Vertex>& order, bool topo_only) {
  if (!topo_only) return true;
  std::vector<int> pos(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return std::all_of(g.arcs().begin(), g.arcs().end(),
                     [&](const Arc& a) { return pos[a.tail] < pos[a.head]; });
}

}  // namespace

SolveResult brushing_number_exact(const Digraph& g, const SolveOptions& opts) {
  const int n = g.order();
  const int cap = std::min(opts.cap, kHardSolverCap);
  if (n > cap) {
    throw TooLarge("n=" + std::to_string(n) + " exceeds solver cap " + std::to_string(cap) +
                   "; only bounds are available at this size");
  }
  if (opts.topo_only && !is_acyclic(g)) {
    throw TopoOnlyOnCyclic("topological orders requested on a cyclic digraph");
  }

  SolveResult result;
  if (n == 0) return result;

  const SearchGraph sg(g);
  Shared shared;
  shared.global_lower = degree_bounds(g).lower;
  if (n >= 2) shared.global_lower = std::max(shared.global_lower, best_cut_lower_bound(g).value);

  // Any topological order realises the threshold-everywhere plan.
  BrushPlan seed = trivial_plan(g);
  if (opts.topo_only) seed.order = *topological_order(g);
  if (opts.seed_with_strategies) {
    StrategyResult best = best_strategy_plan(g);
    if (best.total < seed.total() && order_admissible(g, best.plan.order, opts.topo_only)) {
      seed = best.plan;
    }
  }
  shared.incumbent = seed.total();
  shared.done = shared.incumbent.load() <= shared.global_lower;

  std::vector<Vertex> child_order(n);
  for (Vertex v = 0; v < n; ++v) child_order[v] = v;
  std::stable_sort(child_order.begin(), child_order.end(),
                   [&](Vertex a, Vertex b) { return g.out_degree(a) > g.out_degree(b); });
  std::vector<Vertex> firsts;
  for (Vertex v : child_order) {
    if (sg.available(0, v, opts.topo_only)) firsts.push_back(v);
  }

  std::atomic<std::size_t> next_task{0};
  const int worker_count = std::clamp(opts.workers, 1, static_cast<int>(firsts.size()));
  std::vector<Worker> workers;
  workers.reserve(worker_count);
  for (int i = 0; i < worker_count; ++i) {
    workers.emplace_back(sg, child_order, opts.topo_only, shared);
  }
  auto drain = [&](Worker& w) {
    for (std::size_t t = next_task++; t < firsts.size() && !shared.done; t = next_task++) {
      w.explore_from(firsts[t]);
    }
  };
  if (worker_count == 1) {
    drain(workers[0]);
  } else {
    std::vector<std::jthread> threads;
    for (Worker& w : workers) threads.emplace_back([&drain, &w] { drain(w); });
  }

  result.value = shared.incumbent;
  result.stats.lower_bound_used = shared.global_lower;
  for (const Worker& w : workers) {
    result.stats.orders_explored += w.stats.orders_explored;
    result.stats.pruned += w.stats.pruned;
  }

  auto order = least_optimal_order(sg, result.value, opts.topo_only);
  if (!order) throw InfeasibleNetwork("no order attains the computed optimum");
  result.witness = min_initial_for_order(g, *order).plan();
  return result;
}

int brushing_number_bruteforce(const Digraph& g) {
  const int n = g.order();
  if (n > 5) throw TooLarge("brute force is limited to 5 vertices, got " + std::to_string(n));
  if (n == 0) return 0;

  std::vector<int> threshold(n);
  int isolated = 0;
  for (Vertex v = 0; v < n; ++v) {
    threshold[v] = firing_threshold(g, v);
    if (g.is_isolated(v)) ++isolated;
  }
  const int per_arc = std::max<int>(1, static_cast<int>(g.size()) + isolated);

  // State: fired set and brushes waiting at each unfired vertex. Initial
  // brushes are placed when a vertex fires, exactly covering its deficit;
  // a firing vertex sends everything it holds along its out-arcs (a brush
  // sent to a fired vertex is stranded, which is the same as keeping it).
  std::unordered_map<std::uint64_t, int> memo;
  std::vector<int> received(n, 0);

  std::function<int(Mask)> best = [&](Mask fired) -> int {
    if (fired == (Mask{1} << n) - 1) return 0;
    std::uint64_t key = fired;
    for (Vertex v = 0; v < n; ++v) {
      if (!(fired & (Mask{1} << v))) key = key * 64 + static_cast<std::uint64_t>(received[v]);
    }
    key = key * 8 + static_cast<std::uint64_t>(n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int answer = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < n; ++v) {
      if (fired & (Mask{1} << v)) continue;
      const int extra = std::max(0, threshold[v] - received[v]);
      const int held = received[v] + extra;
      const auto heads = g.out_neighbors(v);
      const Mask now = fired | (Mask{1} << v);
      const int saved = received[v];
      received[v] = 0;

      // Every split of `held` over the out-arcs with each arc in [1, per_arc].
      std::function<void(std::size_t, int)> split = [&](std::size_t k, int left) {
        if (k == heads.size()) {
          if (left == 0 || heads.empty()) answer = std::min(answer, extra + best(now));
          return;
        }
        const int slots_after = static_cast<int>(heads.size() - k - 1);
        for (int f = 1; f <= std::min(per_arc, left - slots_after); ++f) {
          const Vertex w = heads[k];
          const bool open = !(now & (Mask{1} << w));
          if (open) received[w] += f;
          split(k + 1, left - f);
          if (open) received[w] -= f;
        }
      };
      split(0, held);
      received[v] = saved;
    }
    memo.emplace(key, answer);
    return answer;
  };
  return best(0);
}

std::vector<Digraph> regular_tournaments(int n) {
  if (n < 1 || n % 2 == 0) {
    throw BadSize("regular tournaments need an odd order, got " + std::to_string(n));
  }
  const int k = (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<int> out(n, 0), undecided(n, n - 1);
  std::vector<Arc> arcs;
  std::vector<Digraph> found;
  std::function<void(std::size_t)> place = [&](std::size_t p) {
    if (p == pairs.size()) {
      found.emplace_back(n, arcs);
      return;
    }
    const auto [i, j] = pairs[p];
    --undecided[i];
    --undecided[j];
    for (const Arc a : {Arc{i, j}, Arc{j, i}}) {
      const Vertex loser = a.tail == i ? j : i;
      if (out[a.tail] + 1 > k || out[loser] + undecided[loser] < k) continue;
      ++out[a.tail];
      arcs.push_back(a);
      place(p + 1);
      arcs.pop_back();
      --out[a.tail];
    }
    ++undecided[i];
    ++undecided[j];
  };
  place(0);
  return found;
}

ConjectureReport conjecture_explorer(int n, const SolveOptions& opts) {
  if (n < 1 || n % 2 == 0) {
    throw BadSize("no regular tournament on an even number of vertices (n=" + std::to_string(n) +
                  ")");
  }
  if (n > 7) throw TooLarge("conjecture explorer is limited to n <= 7, got " + std::to_string(n));
  ConjectureReport report;
  report.n = n;
  report.bound = (n * n - 4 * n + 7) / 4;
  for (Digraph& t : regular_tournaments(n)) {
    const int value = brushing_number_exact(t, opts).value;
    report.max_value = std::max(report.max_value, value);
    report.tournaments.push_back({std::move(t), value});
  }
  report.holds = report.max_value <= report.bound;
  return report;
}

}  // namespace dibrush
