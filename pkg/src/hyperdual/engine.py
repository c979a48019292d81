"""Depth-first traversal of the solution tree, one paused cursor per level."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .children import ChildrenCursor, candidate_bound
from .degeneracy import EliminationOrdering, weak_ordering
from .hypergraph import Hypergraph
from .transversal import LevelView, PartialSolution

__all__ = ["WorkCounters", "Enumeration", "enumerate_tr", "enumerate_tr_auto", "delay_bound"]


@dataclass
class WorkCounters:
    nodes_expanded: int = 0
    candidate_checks: int = 0
    per_output_delay: list[int] = field(default_factory=list)
    max_stack_depth: int = 0

    @property
    def solutions(self) -> int:
        return max(len(self.per_output_delay) - 1, 0)

    @property
    def max_delay(self) -> int:
        return max(self.per_output_delay, default=0)


def delay_bound(n: int, d: int, k: int) -> int:
    """2(n+1)((k+1)^(2^d) + 1) candidate checks between two outputs."""
    return 2 * (n + 1) * (candidate_bound(d, k) + 1)


class Enumeration:
    """Iterable stream of the minimal transversals of H.

    Iterate to receive frozensets; ``counters`` is live during the run and
    complete once the stream is exhausted.  With ``limit`` the traversal
    stops after that many solutions; the trailing delay entry is then 0.
    """

    def __init__(self, H: Hypergraph, ordering, limit: int | None = None):
        self.H = H
        self.view = LevelView(H, ordering)
        self.d = max(map(len, self.view.new_edges), default=0)
        self.k = H.dimension
        self.limit = limit
        self.counters = WorkCounters()
        self._started = False

    @property
    def bound(self) -> int:
        return delay_bound(self.H.n, self.d, self.k)

    def __iter__(self) -> Iterator[frozenset[int]]:
        if self._started:
            raise RuntimeError("an Enumeration can only be iterated once")
        self._started = True
        return self._run()

    def _run(self) -> Iterator[frozenset[int]]:
        view = self.view
        n = view.n
        c = self.counters
        emitted = 0
        since = 0
        if self.limit is not None and self.limit <= 0:
            return

        root = PartialSolution(0, frozenset(), 0)
        if n == 0:
            c.max_stack_depth = 0
            c.per_output_delay.append(0)
            yield root.vertices
            c.per_output_delay.append(0)
            return

        stack = [ChildrenCursor(view, root)]
        c.nodes_expanded = 1
        c.max_stack_depth = 1
        while stack:
            top = stack[-1]
            before = top.candidate_checks
            child = next(top, None)
            spent = top.candidate_checks - before
            c.candidate_checks += spent
            since += spent
            if child is None:
                stack.pop()
                continue
            if child.level == n:
                c.per_output_delay.append(since)
                since = 0
                emitted += 1
                if self.limit is not None and emitted >= self.limit:
                    c.per_output_delay.append(0)
                    yield child.vertices
                    return
                yield child.vertices
                continue
            stack.append(ChildrenCursor(view, child))
            c.nodes_expanded += 1
            if len(stack) > c.max_stack_depth:
                c.max_stack_depth = len(stack)
        c.per_output_delay.append(since)


def enumerate_tr(H: Hypergraph, ordering: EliminationOrdering | list[int] | tuple[int, ...],
                 limit: int | None = None) -> Enumeration:
    """Stream Tr(H) along the given elimination ordering (any permutation)."""
    return Enumeration(H, ordering, limit)


def enumerate_tr_auto(H: Hypergraph, limit: int | None = None) -> Enumeration:
    return Enumeration(H, weak_ordering(H), limit)
