"""Minimal transversal and minimal dominating set enumeration by ordered
generation, with delay instrumentation."""

from .children import ChildrenCursor, TraceClass, candidate_bound, children_of, trace_classes
from .degeneracy import EliminationOrdering, strong_ordering, verify_ordering, weak_ordering
from .domination import (
    brute_force_mds,
    check_dimension_bound,
    closed_neighborhood_hypergraph,
    enumerate_mds,
    graph_degeneracy_ordering,
)
from .engine import WorkCounters, delay_bound, enumerate_tr, enumerate_tr_auto
from .hypergraph import (
    Graph,
    Hypergraph,
    dimension,
    incident_edges,
    induced,
    max_degree,
    parse_graph,
    parse_hypergraph,
    serialize_graph,
    serialize_hypergraph,
    trace,
)
from .instances import (
    ColoredGraph,
    gen_mis_reduction,
    gen_pendant_clique,
    gen_random_degenerate,
    mis_oracle,
)
from .transversal import (
    PartialSolution,
    brute_force_tr,
    is_minimal_transversal,
    is_transversal,
    parent,
    private_edges,
)

__version__ = "0.1.0"
