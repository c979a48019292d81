"""Minimal dominating sets as minimal transversals of closed neighborhoods."""

from __future__ import annotations

from itertools import combinations

from .degeneracy import EliminationOrdering
from .engine import Enumeration, enumerate_tr
from .errors import TooLargeForOracle
from .hypergraph import Graph, Hypergraph
from .transversal import ORACLE_LIMIT, canonical_sorted

__all__ = [
    "closed_neighborhood_hypergraph",
    "graph_degeneracy_ordering",
    "graph_degeneracy",
    "enumerate_mds",
    "check_dimension_bound",
    "brute_force_mds",
    "is_dominating",
]


def closed_neighborhood_hypergraph(G: Graph) -> tuple[Hypergraph, dict[int, tuple[int, ...]]]:
    """N(G) plus, for each edge id, the graph vertices whose N[v] it is.

    True twins share one hyperedge, so a provenance entry can list several
    vertices.
    """
    producers: dict[frozenset[int], list[int]] = {}
    for v in range(1, G.n + 1):
        producers.setdefault(G.closed_neighborhood(v), []).append(v)
    H = Hypergraph(G.n, producers)
    provenance = {eid: tuple(producers[frozenset(e)]) for eid, e in enumerate(H.edges)}
    return H, provenance


def graph_degeneracy_ordering(G: Graph) -> EliminationOrdering:
    """Greedy min-degree elimination (smallest id on ties), filled back to front.

    ``d`` is the graph degeneracy: the largest number of earlier neighbors
    of any vertex.
    """
    alive = set(range(1, G.n + 1))
    deg = {v: G.degree(v) for v in alive}
    order = [0] * G.n
    d = 0
    for pos in range(G.n - 1, -1, -1):
        v = min(alive, key=lambda u: (deg[u], u))
        order[pos] = v
        d = max(d, deg[v])
        alive.remove(v)
        for u in G.neighbors(v):
            if u in alive:
                deg[u] -= 1
    return EliminationOrdering(tuple(order), "graph", d)


def graph_degeneracy(G: Graph, order) -> int:
    """Max number of earlier neighbors along ``order``."""
    pos = {v: p for p, v in enumerate(order)}
    return max((sum(1 for u in G.neighbors(v) if pos[u] < pos[v]) for v in order), default=0)


def enumerate_mds(G: Graph, limit: int | None = None) -> Enumeration:
    H, _ = closed_neighborhood_hypergraph(G)
    return enumerate_tr(H, graph_degeneracy_ordering(G), limit)


def check_dimension_bound(G: Graph) -> bool:
    H, _ = closed_neighborhood_hypergraph(G)
    return H.dimension <= G.max_degree + 1


def is_dominating(G: Graph, D) -> bool:
    D = set(D)
    return all(v in D or any(u in D for u in G.neighbors(v)) for v in range(1, G.n + 1))


def brute_force_mds(G: Graph) -> list[frozenset[int]]:
    """Minimal dominating sets by subset enumeration.

    Minimality is tested by dropping each vertex in turn, independently of
    the private-edge characterisation used by the transversal code.
    """
    if G.n > ORACLE_LIMIT:
        raise TooLargeForOracle(f"{G.n} vertices > {ORACLE_LIMIT}")
    found = []
    verts = range(1, G.n + 1)
    for size in range(G.n + 1):
        for D in combinations(verts, size):
            if is_dominating(G, D) and not any(
                is_dominating(G, [u for u in D if u != v]) for v in D
            ):
                found.append(D)
    return canonical_sorted(found)
