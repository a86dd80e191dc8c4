#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "dibrush/engine.hpp"
#include "dibrush/error.hpp"
#include "dibrush/families.hpp"
#include "dibrush/floworder.hpp"

using namespace dibrush;

namespace {

std::vector<Vertex> identity(int n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// Can `initial` clean g along `order` under some split of the brushes?
// Every held brush is forwarded: extra brushes never hurt a later vertex.
bool feasible_by_search(const Digraph& g, const std::vector<Vertex>& order,
                        const std::vector<int>& initial) {
  const int n = g.order();
  std::vector<int> received(n, 0);
  std::function<bool(int)> step = [&](int pos) -> bool {
    if (pos == n) return true;
    const Vertex v = order[pos];
    const int held = initial[v] + received[v];
    if (held < firing_threshold(g, v)) return false;
    const auto heads = g.out_neighbors(v);
    const int d = static_cast<int>(heads.size());
    if (d == 0) return step(pos + 1);
    std::vector<int> split(d, 1);
    std::function<bool(int, int)> place = [&](int k, int left) -> bool {
      if (k == d - 1) {
        split[k] = 1 + left;
        for (int i = 0; i < d; ++i) received[heads[i]] += split[i];
        const bool ok = step(pos + 1);
        for (int i = 0; i < d; ++i) received[heads[i]] -= split[i];
        return ok;
      }
      for (int extra = 0; extra <= left; ++extra) {
        split[k] = 1 + extra;
        if (place(k + 1, left - extra)) return true;
      }
      return false;
    };
    return place(0, held - d);
  };
  return step(0);
}

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (int x = total; x >= 0; --x) {
    cur.push_back(x);
    compositions(total - x, parts, cur, visit);
    cur.pop_back();
  }
}

struct OracleResult {
  int total = 0;
  std::vector<std::vector<int>> optimal;  // every optimal initial vector
};

OracleResult oracle(const Digraph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  for (int total = 0;; ++total) {
    OracleResult r{total, {}};
    std::vector<int> cur;
    compositions(total, n, cur, [&](const std::vector<int>& by_position) {
      std::vector<int> initial(n);
      for (int i = 0; i < n; ++i) initial[order[i]] = by_position[i];
      if (feasible_by_search(g, order, initial)) r.optimal.push_back(initial);
    });
    if (!r.optimal.empty()) return r;
  }
}

std::vector<int> by_position(const std::vector<int>& initial, const std::vector<Vertex>& order) {
  std::vector<int> out;
  for (Vertex v : order) out.push_back(initial[v]);
  return out;
}

void check_against_oracle(const Digraph& g, const std::vector<Vertex>& order) {
  const OracleResult want = oracle(g, order);
  const OrderSolution got = min_initial_for_order(g, order);
  ASSERT_EQ(got.total, want.total);
  EXPECT_EQ(min_total_for_order(g, order), want.total);
  EXPECT_NO_THROW(run(g, got.plan()));
  std::vector<int> best = by_position(want.optimal.front(), order);
  for (const auto& v : want.optimal) best = std::max(best, by_position(v, order));
  EXPECT_EQ(by_position(got.initial, order), best);
}

}  // namespace

TEST(MinInitialForOrder, Examples) {
  EXPECT_EQ(min_initial_for_order(bowtie_graph(), identity(8)).total, 3);
  EXPECT_EQ(min_initial_for_order(transitive_tournament(4), identity(4)).total, 4);
  EXPECT_EQ(min_initial_for_order(transitive_tournament(4), std::vector<Vertex>{3, 2, 1, 0}).total, 6);
  EXPECT_EQ(min_initial_for_order(Digraph(2, {{0, 1}}), identity(2)).total, 1);
  EXPECT_EQ(min_initial_for_order(Digraph(3, {}), identity(3)).total, 3);
  EXPECT_EQ(min_initial_for_order(converging_graph(), identity(4)).total, 3);
}

TEST(MinInitialForOrder, WitnessIsAValidPlan) {
  const OrderSolution s = min_initial_for_order(bowtie_graph(), identity(8));
  EXPECT_EQ(s.initial, (std::vector<int>{1, 1, 1, 0, 0, 0, 0, 0}));
  const CleaningTrace trace = run(bowtie_graph(), s.plan());
  EXPECT_EQ(trace.total, 3);
  EXPECT_EQ(trace.flows, s.flows);
}

TEST(MinInitialForOrder, PrefersEarlyBrushes) {
  const Digraph g(4, {{0, 1}, {1, 2}, {1, 3}});
  EXPECT_EQ(min_initial_for_order(g, identity(4)).initial, (std::vector<int>{2, 0, 0, 0}));
}

TEST(MinInitialForOrder, RejectsBadOrders) {
  EXPECT_THROW(min_initial_for_order(transitive_tournament(3), std::vector<Vertex>{0, 1}), InvalidPlan);
  EXPECT_THROW(min_initial_for_order(transitive_tournament(3), std::vector<Vertex>{0, 0, 1}), InvalidPlan);
}

TEST(MinInitialForOrder, MatchesSearchOnAllSmallDigraphs) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Arc> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v) pairs.push_back({u, v});
      }
    }
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1u) arcs.push_back(pairs[i]);
      }
      const Digraph g(n, arcs);
      std::vector<Vertex> order = identity(n);
      do {
        SCOPED_TRACE(::testing::Message() << "n=" << n << " mask=" << mask);
        check_against_oracle(g, order);
        if (::testing::Test::HasFatalFailure()) return;
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST(FlowNetwork, Shape) {
  const Digraph g = transitive_tournament(3);
  const std::vector<Vertex> order{0, 2, 1};
  const FlowNetwork net = build_order_network(g, order);
  EXPECT_EQ(net.node_count, 5);
  EXPECT_EQ(net.arcs.size(), 3u + 3u + 3u);
  const NetworkArc backward = net.arcs[net.graph_arc[*g.arc_index(1, 2)]];
  EXPECT_EQ(backward.to, net.sink);
  EXPECT_EQ(backward.lower, 1);
  const NetworkArc forward = net.arcs[net.graph_arc[*g.arc_index(0, 1)]];
  EXPECT_EQ(forward.to, 1);
  const std::vector<int> flow = solve_min_flow(net);
  EXPECT_EQ(source_outflow(net, flow), min_total_for_order(g, order));
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    EXPECT_GE(flow[i], net.arcs[i].lower);
    EXPECT_LE(flow[i], net.arcs[i].upper);
  }
}

TEST(FlowNetwork, InfeasibleNetworkThrows) {
  FlowNetwork net;
  net.node_count = 3;
  net.source = 1;
  net.sink = 2;
  net.arcs = {{1, 0, 0, 1}, {0, 2, 2, 3}};
  EXPECT_THROW(solve_min_flow(net), InfeasibleNetwork);
}
