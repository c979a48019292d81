"""Elimination orderings for weak and strong hypergraph degeneracy.

In weak mode a vertex is scored by its degree in the hypergraph induced by
its prefix; in strong mode by its degree in the trace on its prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .errors import NotAPermutation
from .hypergraph import Hypergraph, iter_bits

__all__ = [
    "EliminationOrdering",
    "weak_ordering",
    "strong_ordering",
    "verify_ordering",
    "check_permutation",
]

Mode = Literal["weak", "strong", "graph"]


@dataclass(frozen=True)
class EliminationOrdering:
    """``order[p]`` is the vertex at position p+1; ``d`` is its achieved score."""

    order: tuple[int, ...]
    mode: Mode
    d: int

    @classmethod
    def scored(cls, H: Hypergraph, order: Sequence[int], mode: Mode = "weak"):
        order = tuple(order)
        return cls(order, mode, verify_ordering(H, order, mode))

    def positions(self) -> dict[int, int]:
        """Vertex -> 1-based position."""
        return {v: p for p, v in enumerate(self.order, 1)}

    def __len__(self):
        return len(self.order)


def check_permutation(n: int, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(order)
    if len(order) != n or set(order) != set(range(1, n + 1)):
        raise NotAPermutation(f"not a permutation of 1..{n}: {list(order)}")
    return order


def _induced_degree(H: Hypergraph, v: int, s: int) -> int:
    masks = H.edge_masks
    return sum(1 for e in H.incident_edges(v) if masks[e] & ~s == 0)


def _trace_degree(H: Hypergraph, v: int, s: int) -> int:
    masks = H.edge_masks
    return len({masks[e] & s for e in H.incident_edges(v)})


def _scorer(mode: Mode):
    if mode == "weak":
        return _induced_degree
    if mode == "strong":
        return _trace_degree
    raise ValueError(f"unknown mode {mode!r}")


def verify_ordering(H: Hypergraph, order: Sequence[int], mode: Mode = "weak") -> int:
    """Max over positions i of the score of v_i within the prefix V_i."""
    order = check_permutation(H.n, order)
    score = _scorer(mode)
    best = 0
    prefix = 0
    for v in order:
        prefix |= 1 << v
        best = max(best, score(H, v, prefix))
    return best


def _greedy(H: Hypergraph, mode: Mode) -> EliminationOrdering:
    score = _scorer(mode)
    s = 0
    for v in range(1, H.n + 1):
        s |= 1 << v
    order = [0] * H.n
    d = 0
    for pos in range(H.n - 1, -1, -1):
        deg, v = min((score(H, u, s), u) for u in iter_bits(s))
        order[pos] = v
        d = max(d, deg)
        s &= ~(1 << v)
    return EliminationOrdering(tuple(order), mode, d)


def weak_ordering(H: Hypergraph) -> EliminationOrdering:
    """Greedy min-degree elimination; optimal for weak degeneracy.

    The vertex of least induced degree (smallest id on ties) is removed and
    placed at the last free position.
    """
    return _greedy(H, "weak")


def strong_ordering(H: Hypergraph) -> EliminationOrdering:
    """Same greedy scheme scoring trace degree; optimal for strong degeneracy."""
    return _greedy(H, "strong")
