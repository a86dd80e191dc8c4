#pragma once

#include "json.hpp"

#include "dibrush/bounds.hpp"
#include "dibrush/engine.hpp"
#include "dibrush/solver.hpp"
#include "dibrush/strategies.hpp"

namespace dibrush {

using Json = nlohmann::ordered_json;

Json to_json(const BrushPlan& plan);
Json to_json(const CleaningTrace& trace);
Json to_json(const SolveResult& result);
Json to_json(const BoundReport& report);
Json to_json(const PathDecomposition& m);
Json to_json(const ConjectureReport& report);
Json arcs_to_json(const Digraph& g);

/// Throws InvalidPlan when the document does not have the plan shape.
BrushPlan plan_from_json(const Json& doc);
BrushPlan parse_plan(const std::string& text);

}  // namespace dibrush
