"""Transversal predicates, the greedy parent map, and a brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .degeneracy import EliminationOrdering, check_permutation
from .errors import NotAMinimalTransversal, TooLargeForOracle, VertexNotInSet
from .hypergraph import Hypergraph, iter_bits, mask_of, vertices_of

__all__ = [
    "PartialSolution",
    "LevelView",
    "is_transversal",
    "private_edges",
    "is_minimal_transversal",
    "parent",
    "brute_force_tr",
    "canonical_sorted",
    "ORACLE_LIMIT",
]

ORACLE_LIMIT = 20


@dataclass(frozen=True)
class PartialSolution:
    """Node (T, i) of the solution tree: T is a minimal transversal of H_i."""

    level: int
    vertices: frozenset[int]
    mask: int = field(default=-1, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        if self.mask < 0:
            object.__setattr__(self, "mask", mask_of(self.vertices))

    @classmethod
    def from_mask(cls, level: int, mask: int) -> "PartialSolution":
        return cls(level, vertices_of(mask), mask)


def _order_of(H: Hypergraph, ordering) -> tuple[int, ...]:
    if isinstance(ordering, EliminationOrdering):
        ordering = ordering.order
    return check_permutation(H.n, ordering)


class LevelView:
    """Prefix structure of H under a fixed ordering v_1..v_n.

    ``edges_upto[i]`` holds the edge masks of H_i = H[V_i]; ``new_edges[i]``
    the ids of edges of H_i that are not in H_{i-1}, which are exactly the
    edges of H_i incident to v_i.
    """

    def __init__(self, H: Hypergraph, ordering):
        self.H = H
        self.order = _order_of(H, ordering)
        n = H.n
        self.n = n
        self.pos = [0] * (n + 1)
        for p, v in enumerate(self.order, 1):
            self.pos[v] = p
        self.prefix = [0] * (n + 1)
        for p, v in enumerate(self.order, 1):
            self.prefix[p] = self.prefix[p - 1] | (1 << v)

        buckets: list[list[int]] = [[] for _ in range(n + 1)]
        for eid, e in enumerate(H.edges):
            buckets[max(self.pos[v] for v in e)].append(eid)
        self.new_edges = tuple(tuple(b) for b in buckets)
        upto = []
        acc: list[int] = []
        for i in range(n + 1):
            acc.extend(H.edge_masks[e] for e in buckets[i])
            upto.append(tuple(acc))
        self.edges_upto = tuple(upto)

    def vertex(self, i: int) -> int:
        return self.order[i - 1]

    def level_hypergraph(self, i: int) -> Hypergraph:
        edges = [self.H.edges[e] for j in range(i + 1) for e in self.new_edges[j]]
        return Hypergraph(self.n, edges, self.order[:i])

    def parent_mask(self, t: int, i: int) -> int:
        """The greedy parent of t (a minimal transversal of H_{i+1}) at level i."""
        edges = self.edges_upto[i]
        pos = self.pos
        while True:
            lacking = t & ~private_owners(edges, t)
            if not lacking:
                return t
            v = min(iter_bits(lacking), key=pos.__getitem__)
            t &= ~(1 << v)


# --- mask-level predicates ---------------------------------------------------

def hits_all(edges: Sequence[int], t: int) -> bool:
    for e in edges:
        if not e & t:
            return False
    return True


def private_owners(edges: Sequence[int], t: int) -> int:
    """Mask of vertices of t owning at least one private edge."""
    owners = 0
    for e in edges:
        x = e & t
        if x and not x & (x - 1):
            owners |= x
    return owners


def is_minimal_mask(edges: Sequence[int], t: int) -> bool:
    return hits_all(edges, t) and private_owners(edges, t) == t


# --- public set-level API ------------------------------------------------------

def is_transversal(H: Hypergraph, T: Iterable[int]) -> bool:
    return hits_all(H.edge_masks, mask_of(T))


def private_edges(H: Hypergraph, T: Iterable[int], v: int) -> frozenset[int]:
    """Ids of the edges E with E ∩ T = {v}."""
    t = mask_of(T)
    bit = 1 << v
    if not t & bit:
        raise VertexNotInSet(f"vertex {v} is not in the set")
    return frozenset(eid for eid, e in enumerate(H.edge_masks) if e & t == bit)


def is_minimal_transversal(H: Hypergraph, T: Iterable[int]) -> bool:
    return is_minimal_mask(H.edge_masks, mask_of(T))


def parent(H: Hypergraph, ordering, T: Iterable[int], i_plus_1: int,
           view: LevelView | None = None) -> frozenset[int]:
    """Greedy parent of T ∈ Tr(H_{i+1}) with respect to i+1.

    While some vertex of T has no private edge in H_i, the one earliest in
    the ordering is removed.  Raises NotAMinimalTransversal if T is not a
    minimal transversal of H_{i+1}.
    """
    view = view or LevelView(H, ordering)
    if not 1 <= i_plus_1 <= view.n:
        raise ValueError(f"level {i_plus_1} outside 1..{view.n}")
    t = mask_of(T)
    if not is_minimal_mask(view.edges_upto[i_plus_1], t):
        raise NotAMinimalTransversal(
            f"{sorted(vertices_of(t))} is not a minimal transversal of H_{i_plus_1}")
    return vertices_of(view.parent_mask(t, i_plus_1 - 1))


def canonical_sorted(sets: Iterable[Iterable[int]]) -> list[frozenset[int]]:
    """Sort vertex sets lexicographically by their ascending vertex lists."""
    return [frozenset(s) for s in sorted(tuple(sorted(s)) for s in sets)]


def brute_force_tr(H: Hypergraph) -> list[frozenset[int]]:
    """All minimal transversals of H by exhaustive subset enumeration."""
    verts = sorted(H.vertices)
    if len(verts) > ORACLE_LIMIT:
        raise TooLargeForOracle(f"{len(verts)} vertices > {ORACLE_LIMIT}")
    edges = H.edge_masks
    half = len(verts) // 2
    low = _subset_masks(verts[:half])
    high = _subset_masks(verts[half:])
    found = []
    for h in high:
        for lo in low:
            t = h | lo
            if hits_all(edges, t) and private_owners(edges, t) == t:
                found.append(vertices_of(t))
    return canonical_sorted(found)


def _subset_masks(verts: Sequence[int]) -> list[int]:
    masks = [0]
    for v in verts:
        bit = 1 << v
        masks += [m | bit for m in masks]
    return masks
