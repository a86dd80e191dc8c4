#include "dibrush/serialize.hpp"

#include <string>

#include "dibrush/error.hpp"

namespace dibrush {

namespace {

Json flows_json(const std::vector<ArcFlow>& flows) {
  Json out = Json::array();
  for (const ArcFlow& f : flows) out.push_back({{"u", f.tail}, {"v", f.head}, {"f", f.flow}});
  return out;
}

std::vector<int> int_array(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InvalidPlan(std::string("missing array \"") + key + "\"");
  }
  std::vector<int> out;
  for (const Json& x : doc[key]) {
    if (!x.is_number_integer()) throw InvalidPlan(std::string("non-integer entry in \"") + key + "\"");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json arcs_to_json(const Digraph& g) {
  Json out = Json::array();
  for (const Arc& a : g.arcs()) out.push_back({a.tail, a.head});
  return out;
}

Json to_json(const BrushPlan& plan) {
  Json out;
  out["initial"] = plan.initial;
  out["order"] = plan.order;
  if (plan.flows) out["flows"] = flows_json(*plan.flows);
  return out;
}

Json to_json(const CleaningTrace& trace) {
  Json steps = Json::array();
  for (const TraceStep& s : trace.steps) {
    Json arcs = Json::array();
    for (const Arc& a : s.clean_arcs) arcs.push_back({a.tail, a.head});
    steps.push_back({{"t", s.t},
                     {"brushes", s.brushes},
                     {"clean_vertices", s.clean_vertices},
                     {"clean_arcs", std::move(arcs)}});
  }
  Json out;
  out["steps"] = std::move(steps);
  out["total"] = trace.total;
  out["order"] = trace.order;
  out["flows"] = flows_json(trace.flows);
  out["brush_paths"] = trace.brush_paths;
  return out;
}

Json to_json(const SolveResult& result) {
  Json out;
  out["value"] = result.value;
  out["witness"] = to_json(result.witness);
  out["stats"] = {{"orders_explored", result.stats.orders_explored},
                  {"pruned", result.stats.pruned},
                  {"lower_bound_used", result.stats.lower_bound_used}};
  return out;
}

Json to_json(const BoundReport& report) {
  Json out;
  out["max_outdeg"] = report.max_outdeg;
  out["arc_count"] = report.arc_count;
  out["degree_lower"] = report.degree.lower;
  out["degree_upper"] = report.degree.upper;
  if (report.cut) {
    out["cut_bound"] = {{"value", report.cut->value}, {"witness", report.cut->witness}};
  } else {
    out["cut_bound"] = nullptr;
  }
  out["tree_duality"] = report.tree_duality ? Json(*report.tree_duality) : Json(nullptr);
  out["pn_lower"] = report.pn_lower ? Json(*report.pn_lower) : Json(nullptr);
  return out;
}

Json to_json(const PathDecomposition& m) {
  Json out;
  out["paths"] = m.paths;
  out["excess"] = m.excess;
  return out;
}

Json to_json(const ConjectureReport& report) {
  Json out;
  out["n"] = report.n;
  out["bound"] = report.bound;
  out["max_value"] = report.max_value;
  out["holds"] = report.holds;
  out["count"] = report.tournaments.size();
  Json list = Json::array();
  for (const ConjectureEntry& e : report.tournaments) {
    list.push_back({{"arcs", arcs_to_json(e.tournament)}, {"value", e.value}});
  }
  out["tournaments"] = std::move(list);
  return out;
}

BrushPlan plan_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidPlan("plan must be a JSON object");
  BrushPlan plan;
  plan.initial = int_array(doc, "initial");
  plan.order = int_array(doc, "order");
  if (doc.contains("flows") && !doc["flows"].is_null()) {
    if (!doc["flows"].is_array()) throw InvalidPlan("\"flows\" must be an array");
    std::vector<ArcFlow> flows;
    for (const Json& f : doc["flows"]) {
      if (!f.is_object() || !f.contains("u") || !f.contains("v") || !f.contains("f") ||
          !f["u"].is_number_integer() || !f["v"].is_number_integer() ||
          !f["f"].is_number_integer()) {
        throw InvalidPlan("flow entries need integer u, v and f");
      }
      flows.push_back({f["u"].get<int>(), f["v"].get<int>(), f["f"].get<int>()});
    }
    plan.flows = std::move(flows);
  }
  return plan;
}

BrushPlan parse_plan(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidPlan(std::string("not valid JSON: ") + e.what());
  }
  return plan_from_json(doc);
}

}  // namespace dibrush
