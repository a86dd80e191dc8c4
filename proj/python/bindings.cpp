#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dibrush/bounds.hpp"
#include "dibrush/error.hpp"
#include "dibrush/families.hpp"
#include "dibrush/floworder.hpp"
#include "dibrush/io.hpp"
#include "dibrush/serialize.hpp"
#include "dibrush/solver.hpp"
#include "dibrush/strategies.hpp"

namespace py = pybind11;
using namespace dibrush;

namespace {

using ArcPairs = std::vector<std::pair<int, int>>;

Digraph make_graph(int n, const ArcPairs& arcs) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (auto [u, v] : arcs) out.push_back({u, v});
  return Digraph(n, std::move(out));
}

ArcPairs arc_pairs(const Digraph& g) {
  ArcPairs out;
  for (const Arc& a : g.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Brushing numbers of directed graphs";

  py::register_exception<Error>(m, "DibrushError", PyExc_RuntimeError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("arcs"))
      .def_property_readonly("n", &Digraph::order)
      .def_property_readonly("arcs", &arc_pairs)
      .def("out_degree", &Digraph::out_degree)
      .def("in_degree", &Digraph::in_degree)
      .def("has_arc", &Digraph::has_arc)
      .def("transpose", [](const Digraph& g) { return transpose(g); })
      .def("remove_arc", [](const Digraph& g, int u, int v) { return remove_arc(g, {u, v}); })
      .def("relabel", [](const Digraph& g, const std::vector<Vertex>& perm) { return relabel(g, perm); })
      .def("edge_list", &serialize_edge_list)
      .def(py::self == py::self)
      .def("__len__", &Digraph::size)
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(n=" + std::to_string(g.order()) + ", arcs=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("transitive_tournament", &transitive_tournament);
  m.def("complete_digraph", &complete_digraph);
  m.def("rotational_tournament", &rotational_tournament);
  m.def("rooted_tree", &rooted_tree);
  m.def("random_dag", &random_dag, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("random_digraph", &random_digraph, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("random_rooted_tree", &random_rooted_tree, py::arg("n"), py::arg("seed"));
  m.def("bowtie_graph", &bowtie_graph);
  m.def("converging_graph", &converging_graph);
  m.def("layered_six_graph", &layered_six_graph);
  m.def("layered_six_arc", [] {
    const Arc e = layered_six_arc();
    return std::make_pair(e.tail, e.head);
  });

  m.def(
      "_solve",
      [](const Digraph& g, bool topo_only, int workers, int cap) {
        SolveOptions opts;
        opts.topo_only = topo_only;
        opts.workers = workers;
        opts.cap = cap;
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = brushing_number_exact(g, opts);
        }
        return to_json(r).dump();
      },
      py::arg("g"), py::arg("topo_only") = false, py::arg("workers") = 1,
      py::arg("cap") = kDefaultSolverCap);
  m.def("brushing_number_bruteforce", &brushing_number_bruteforce);
  m.def("min_total_for_order", [](const Digraph& g, const std::vector<Vertex>& order) {
    return min_total_for_order(g, order);
  });
  m.def("_bounds", [](const Digraph& g) { return to_json(bound_report(g)).dump(); });
  m.def("_strategy", [](const Digraph& g, const std::string& method) {
    const auto parsed = parse_method(method);
    if (!parsed) throw MethodNotApplicable("unknown method " + method);
    const StrategyResult r = apply_strategy(g, *parsed);
    Json doc = to_json(r.plan);
    doc["method"] = method_name(r.method);
    doc["total"] = r.total;
    return doc.dump();
  });
  m.def("_simulate", [](const Digraph& g, const std::string& plan_json) {
    return to_json(run(g, parse_plan(plan_json))).dump();
  });
  m.def("_conjecture", [](int n) { return to_json(conjecture_explorer(n)).dump(); });
  m.attr("DEFAULT_SOLVER_CAP") = kDefaultSolverCap;
  m.attr("HARD_SOLVER_CAP") = kHardSolverCap;
}
