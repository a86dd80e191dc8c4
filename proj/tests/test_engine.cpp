#include <gtest/gtest.h>

#include <numeric>

#include "dibrush/engine.hpp"
#include "dibrush/error.hpp"
#include "dibrush/families.hpp"
#include "dibrush/floworder.hpp"

using namespace dibrush;

namespace {

BrushPlan plan(std::vector<int> initial, std::vector<Vertex> order) {
  return {std::move(initial), std::move(order), std::nullopt};
}

std::vector<Vertex> identity(int n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

TEST(FiringThreshold, Examples) {
  EXPECT_EQ(firing_threshold(Digraph(1, {}), 0), 1);
  EXPECT_EQ(firing_threshold(bowtie_graph(), 7), 0);
  EXPECT_EQ(firing_threshold(transitive_tournament(5), 0), 4);
}

TEST(Run, BowtieWithThreeBrushes) {
  const Digraph g = bowtie_graph();
  const CleaningTrace trace = run(g, plan({1, 1, 1, 0, 0, 0, 0, 0}, identity(8)));
  EXPECT_EQ(trace.total, 3);
  EXPECT_TRUE(trace.complete(g));
  ASSERT_EQ(trace.steps.size(), 9u);
  EXPECT_EQ(trace.steps[3].brushes[3], 3);
  EXPECT_EQ(trace.steps[4].brushes[4], 3);
  EXPECT_EQ(trace.final_brushes(), (std::vector<int>{0, 0, 0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(trace.flows[3].flow, 3);  // arc (3, 4)
}

TEST(Run, ConvergingGraphCaptionPlan) {
  const Digraph g = converging_graph();
  const CleaningTrace trace = run(g, plan({2, 0, 0, 1}, {0, 1, 2, 3}));
  EXPECT_EQ(trace.total, 3);
  EXPECT_TRUE(trace.complete(g));
  EXPECT_EQ(trace.steps[1].brushes, (std::vector<int>{0, 1, 1, 1}));
  EXPECT_EQ(trace.steps[2].brushes, (std::vector<int>{0, 0, 2, 1}));
  EXPECT_EQ(trace.steps[4].brushes, (std::vector<int>{0, 0, 3, 0}));
}

TEST(Run, InsufficientBrushes) {
  try {
    run(Digraph(1, {}), plan({0}, {0}));
    FAIL();
  } catch (const InsufficientBrushes& e) {
    EXPECT_EQ(e.vertex(), 0);
    EXPECT_EQ(e.have(), 0);
    EXPECT_EQ(e.need(), 1);
    EXPECT_EQ(e.step(), 1);
  }
  try {
    run(transitive_tournament(3), plan({1, 1, 0}, {0, 1, 2}));
    FAIL();
  } catch (const InsufficientBrushes& e) {
    EXPECT_EQ(e.vertex(), 0);
    EXPECT_EQ(e.need(), 2);
  }
}

TEST(Run, LateBrushesDoNotCount) {
  // 1 -> 0 arrives after 0 has fired.
  const Digraph g(2, {{0, 1}, {1, 0}});
  EXPECT_THROW(run(g, plan({0, 1}, {0, 1})), InsufficientBrushes);
  const CleaningTrace ok = run(g, plan({1, 0}, {0, 1}));
  EXPECT_EQ(ok.final_brushes(), (std::vector<int>{1, 0}));
}

TEST(Run, InvalidPlans) {
  const Digraph g = transitive_tournament(3);
  EXPECT_THROW(run(g, plan({2, 0}, {0, 1, 2})), InvalidPlan);
  EXPECT_THROW(run(g, plan({2, 0, 0}, {0, 1, 1})), InvalidPlan);
  EXPECT_THROW(run(g, plan({2, 0, 0}, {0, 1})), InvalidPlan);
  EXPECT_THROW(run(g, plan({3, -1, 0}, {0, 1, 2})), InvalidPlan);
}

TEST(Run, IllegalFlows) {
  const Digraph g = transitive_tournament(3);
  BrushPlan p = plan({2, 0, 0}, {0, 1, 2});
  p.flows = std::vector<ArcFlow>{{0, 1, 1}, {0, 2, 1}};
  EXPECT_THROW(run(g, p), IllegalFlow);  // (1, 2) missing
  p.flows = std::vector<ArcFlow>{{0, 1, 1}, {0, 2, 0}, {1, 2, 1}};
  EXPECT_THROW(run(g, p), IllegalFlow);
  p.flows = std::vector<ArcFlow>{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 0, 1}};
  EXPECT_THROW(run(g, p), IllegalFlow);
  p.flows = std::vector<ArcFlow>{{0, 1, 2}, {0, 2, 1}, {1, 2, 1}};
  EXPECT_THROW(run(g, p), IllegalFlow);  // overdraw at 0
  p.flows = std::vector<ArcFlow>{{0, 1, 1}, {0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
  EXPECT_THROW(run(g, p), IllegalFlow);
  p.flows = std::vector<ArcFlow>{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
  EXPECT_NO_THROW(run(g, p));
}

TEST(Run, ExplicitFlowsMayRetainSurplus) {
  const Digraph g(3, {{0, 1}, {1, 2}});
  BrushPlan p = plan({3, 0, 0}, {0, 1, 2});
  p.flows = std::vector<ArcFlow>{{0, 1, 2}, {1, 2, 1}};
  const CleaningTrace trace = run(g, p);
  EXPECT_EQ(trace.final_brushes(), (std::vector<int>{1, 1, 1}));
}

TEST(DefaultDispersal, Examples) {
  const Digraph g = bowtie_graph();
  std::vector<bool> fired{true, true, true, false, false, false, false, false};
  EXPECT_EQ(default_dispersal(g, 3, 3, fired), std::vector<int>{3});

  const Digraph fan(3, {{0, 1}, {0, 2}});
  const std::vector<bool> none(3, false);
  EXPECT_EQ(default_dispersal(fan, 0, 2, none), (std::vector<int>{1, 1}));
  EXPECT_EQ(default_dispersal(fan, 0, 3, none), (std::vector<int>{2, 1}));
  EXPECT_EQ(default_dispersal(fan, 0, 6, none), (std::vector<int>{3, 3}));
  EXPECT_EQ(default_dispersal(fan, 0, 5, std::vector<bool>{false, true, false}),
            (std::vector<int>{1, 4}));
  EXPECT_EQ(default_dispersal(fan, 0, 5, std::vector<bool>{false, true, true}),
            (std::vector<int>{1, 1}));
}

TEST(Run, TraceInvariants) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Digraph g = random_digraph(6, 0.35, seed);
    std::vector<int> initial;
    for (Vertex v = 0; v < g.order(); ++v) initial.push_back(firing_threshold(g, v) + (v % 2));
    const BrushPlan p = plan(initial, identity(g.order()));
    const CleaningTrace trace = run(g, p);
    ASSERT_TRUE(trace.complete(g));
    ASSERT_EQ(trace.steps.size(), static_cast<std::size_t>(g.order() + 1));
    for (const TraceStep& s : trace.steps) {
      EXPECT_EQ(std::accumulate(s.brushes.begin(), s.brushes.end(), 0), trace.total);
      for (int b : s.brushes) EXPECT_GE(b, 0);
    }
    // Each arc turns clean exactly at the step its tail fires.
    for (std::size_t t = 1; t < trace.steps.size(); ++t) {
      const Vertex fired = p.order[t - 1];
      EXPECT_EQ(trace.steps[t].clean_arcs.size() - trace.steps[t - 1].clean_arcs.size(),
                static_cast<std::size_t>(g.out_degree(fired)));
    }
    for (const ArcFlow& f : trace.flows) EXPECT_GE(f.flow, 1);
    std::size_t visits = 0;
    for (const auto& path : trace.brush_paths) visits += path.size() - 1;
    std::size_t moved = 0;
    for (const ArcFlow& f : trace.flows) moved += static_cast<std::size_t>(f.flow);
    EXPECT_EQ(visits, moved);

    const CleaningTrace again = run(g, replay_plan(trace));
    EXPECT_EQ(again.flows, trace.flows);
    EXPECT_EQ(again.brush_paths, trace.brush_paths);
    for (std::size_t t = 0; t < trace.steps.size(); ++t) {
      EXPECT_EQ(again.steps[t].brushes, trace.steps[t].brushes);
    }
  }
}

TEST(Run, TransitiveBrushTravelsEveryVertex) {
  for (int n = 3; n <= 9; ++n) {
    std::vector<int> initial(n, 0);
    for (int k = 1; k <= n / 2; ++k) initial[k - 1] = n - (2 * k - 1);
    const CleaningTrace trace = run(transitive_tournament(n), plan(initial, identity(n)));
    EXPECT_EQ(trace.brush_paths[0], identity(n));
  }
}

TEST(Run, BrushIdsFollowInitialVertex) {
  const CleaningTrace trace = run(Digraph(3, {{0, 2}, {1, 2}}), plan({1, 2, 0}, {0, 1, 2}));
  ASSERT_EQ(trace.brush_paths.size(), 3u);
  EXPECT_EQ(trace.brush_paths[0], (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(trace.brush_paths[1], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(trace.brush_paths[2], (std::vector<Vertex>{1, 2}));
}
