#include <gtest/gtest.h>

#include "dibrush/error.hpp"
#include "dibrush/families.hpp"
#include "dibrush/serialize.hpp"

using namespace dibrush;

TEST(PlanJson, RoundTrip) {
  BrushPlan p{{2, 0, 0}, {0, 1, 2}, std::nullopt};
  EXPECT_EQ(to_json(p).dump(), R"({"initial":[2,0,0],"order":[0,1,2]})");
  EXPECT_EQ(plan_from_json(to_json(p)), p);
  p.flows = std::vector<ArcFlow>{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
  EXPECT_EQ(parse_plan(to_json(p).dump()), p);
  const BrushPlan replayed = replay_plan(run(transitive_tournament(3), p));
  EXPECT_EQ(parse_plan(to_json(replayed).dump(2)), replayed);
}

TEST(PlanJson, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_plan("not json"), InvalidPlan);
  EXPECT_THROW(parse_plan("[1, 2]"), InvalidPlan);
  EXPECT_THROW(parse_plan(R"({"initial":[1]})"), InvalidPlan);
  EXPECT_THROW(parse_plan(R"({"initial":[1.5],"order":[0]})"), InvalidPlan);
  EXPECT_THROW(parse_plan(R"({"initial":[1],"order":[0],"flows":{}})"), InvalidPlan);
  EXPECT_THROW(parse_plan(R"({"initial":[1],"order":[0],"flows":[{"u":0}]})"), InvalidPlan);
  EXPECT_NO_THROW(parse_plan(R"({"initial":[1],"order":[0],"flows":null})"));
}

TEST(TraceJson, Shape) {
  const CleaningTrace trace = run(converging_graph(), BrushPlan{{2, 0, 0, 1}, {0, 1, 2, 3}, std::nullopt});
  const Json doc = to_json(trace);
  ASSERT_EQ(doc["steps"].size(), 5u);
  EXPECT_EQ(doc["steps"][1]["brushes"], Json::parse("[0,1,1,1]"));
  EXPECT_EQ(doc["steps"][4]["clean_arcs"].size(), 4u);
  EXPECT_EQ(doc["total"], 3);
  EXPECT_EQ(doc["flows"][0], Json::parse(R"({"u":0,"v":1,"f":1})"));
  EXPECT_EQ(doc["brush_paths"].size(), 3u);
}

TEST(SolveJson, Shape) {
  const SolveResult r = brushing_number_exact(layered_six_graph());
  const Json doc = to_json(r);
  EXPECT_EQ(doc["value"], 3);
  EXPECT_EQ(plan_from_json(doc["witness"]), r.witness);
  EXPECT_TRUE(doc["stats"].contains("orders_explored"));
  EXPECT_TRUE(doc["stats"].contains("pruned"));
  EXPECT_TRUE(doc["stats"].contains("lower_bound_used"));
}

TEST(BoundJson, Shape) {
  const Json doc = to_json(bound_report(converging_graph()));
  EXPECT_EQ(doc["max_outdeg"], 2);
  EXPECT_EQ(doc["arc_count"], 4);
  EXPECT_EQ(doc["cut_bound"]["value"], 3);
  EXPECT_EQ(doc["cut_bound"]["witness"], Json::parse("[0,3]"));
  EXPECT_TRUE(doc["tree_duality"].is_null());
  EXPECT_EQ(doc["pn_lower"], 3);
}

TEST(OtherJson, DecompositionAndConjecture) {
  const Json m = to_json(perfect_decomposition(transitive_tournament(3)));
  EXPECT_EQ(m["paths"].size(), 2u);
  EXPECT_EQ(m["excess"], Json::parse("[2,0,-2]"));
  const Json c = to_json(conjecture_explorer(3));
  EXPECT_EQ(c["n"], 3);
  EXPECT_EQ(c["bound"], 1);
  EXPECT_EQ(c["holds"], true);
  EXPECT_EQ(c["count"], 2);
  EXPECT_EQ(arcs_to_json(Digraph(2, {{1, 0}})), Json::parse("[[1,0]]"));
}
