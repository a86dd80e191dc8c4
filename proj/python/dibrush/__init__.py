"""Brushing numbers of directed graphs."""

import json

from ._core import (
    DEFAULT_SOLVER_CAP,
    HARD_SOLVER_CAP,
    Digraph,
    DibrushError,
    bowtie_graph,
    brushing_number_bruteforce,
    complete_digraph,
    converging_graph,
    layered_six_arc,
    layered_six_graph,
    min_total_for_order,
    parse_edge_list,
    random_dag,
    random_digraph,
    random_rooted_tree,
    rooted_tree,
    rotational_tournament,
    transitive_tournament,
)
from . import _core


def solve(g, topo_only=False, workers=1, cap=DEFAULT_SOLVER_CAP):
    """Exact brushing number as a dict {value, witness, stats}."""
    return json.loads(_core._solve(g, topo_only, workers, cap))


def brushing_number(g, **kwargs):
    return solve(g, **kwargs)["value"]


def bounds(g):
    return json.loads(_core._bounds(g))


def strategy(g, method="auto"):
    return json.loads(_core._strategy(g, method))


def simulate(g, plan):
    """Runs a plan (dict or JSON text) and returns the trace as a dict."""
    text = plan if isinstance(plan, str) else json.dumps(plan)
    return json.loads(_core._simulate(g, text))


def conjecture(n):
    return json.loads(_core._conjecture(n))


__all__ = [
    "DEFAULT_SOLVER_CAP",
    "HARD_SOLVER_CAP",
    "Digraph",
    "DibrushError",
    "bounds",
    "bowtie_graph",
    "brushing_number",
    "brushing_number_bruteforce",
    "complete_digraph",
    "conjecture",
    "converging_graph",
    "layered_six_arc",
    "layered_six_graph",
    "min_total_for_order",
    "parse_edge_list",
    "random_dag",
    "random_digraph",
    "random_rooted_tree",
    "rooted_tree",
    "rotational_tournament",
    "simulate",
    "solve",
    "strategy",
    "transitive_tournament",
]
