"""Children generation for a node (T*, i) of the solution tree.

The vertices of V_{i+1} are grouped by which of the new edges
inc_{i+1}(v_{i+1}) they meet.  A child is T* plus at most one vertex from
each group, so the search space is a mixed-radix counter over the groups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidNode, InvariantViolation
from .hypergraph import Hypergraph, vertices_of
from .transversal import LevelView, PartialSolution, hits_all, is_minimal_mask, private_owners

__all__ = [
    "TraceClass",
    "ChildrenCursor",
    "trace_classes",
    "children_of",
    "candidate_bound",
    "SATURATED",
]

SATURATED = 2**63 - 1


@dataclass(frozen=True)
class TraceClass:
    """Vertices meeting exactly the edges of ``signature`` among the new edges.

    ``pattern`` encodes the signature with bit j standing for the j-th new
    edge (ascending edge id); members are in ascending ordering position.
    """

    signature: frozenset[int]
    pattern: int
    members: tuple[int, ...]


def _classes(view: LevelView, i_plus_1: int) -> list[TraceClass]:
    new = view.new_edges[i_plus_1]
    if not new:
        return []
    masks = [view.H.edge_masks[e] for e in new]
    groups: dict[int, list[int]] = {}
    for u in view.order[:i_plus_1]:
        bit = 1 << u
        pattern = 0
        for j, e in enumerate(masks):
            if e & bit:
                pattern |= 1 << j
        if pattern:
            groups.setdefault(pattern, []).append(u)
    return [
        TraceClass(frozenset(new[j] for j in range(len(new)) if pattern >> j & 1),
                   pattern, tuple(members))
        for pattern, members in sorted(groups.items())
    ]


def trace_classes(H: Hypergraph, ordering, i_plus_1: int,
                  view: LevelView | None = None) -> list[TraceClass]:
    """Nonempty trace classes of V_{i+1} on inc_{i+1}(v_{i+1}), by pattern."""
    view = view or LevelView(H, ordering)
    if not 1 <= i_plus_1 <= view.n:
        raise ValueError(f"level {i_plus_1} outside 1..{view.n}")
    return _classes(view, i_plus_1)


def candidate_bound(d: int, k: int) -> int:
    """(k+1)^(2^d), saturating at SATURATED."""
    if d < 0 or k < 0:
        raise ValueError("d and k must be non-negative")
    base = k + 1
    if base == 1:
        return 1
    if d >= 63:
        return SATURATED
    exponent = 1 << d
    if exponent * (base.bit_length() - 1) >= 63:
        return SATURATED
    value = base**exponent
    return value if value <= SATURATED else SATURATED


class ChildrenCursor:
    """Resumable iterator over children(T*, i).

    Selections are visited in lexicographic order of the per-class choice
    vector (0 = none, j = j-th member), so the empty selection comes first.
    ``candidate_checks`` counts inspected selections.
    """

    def __init__(self, view: LevelView, node: PartialSolution):
        i = node.level
        if not 0 <= i < view.n:
            raise InvalidNode(f"level {i} outside 0..{view.n - 1}")
        tstar = node.mask
        if tstar & ~view.prefix[i] or not is_minimal_mask(view.edges_upto[i], tstar):
            raise InvalidNode(f"{sorted(node.vertices)} is not a minimal transversal of H_{i}")
        self.view = view
        self.node = node
        self.level = i
        self.new_count = len(view.new_edges[i + 1])

        all_classes = _classes(view, i + 1)
        k = view.H.dimension
        if len(all_classes) > 1 << self.new_count:
            raise InvariantViolation(
                f"{len(all_classes)} trace classes exceed 2^{self.new_count}")
        for c in all_classes:
            if len(c.members) > k:
                raise InvariantViolation(f"class {sorted(c.signature)} has more than {k} members")
        self.all_classes = all_classes

        classes = []
        for c in all_classes:
            members = tuple(u for u in c.members if not tstar >> u & 1)
            if members:
                classes.append(TraceClass(c.signature, c.pattern, members))
        self.classes = classes
        self._members = [tuple(1 << u for u in c.members) for c in classes]
        self.digits = [0] * len(classes)
        self.exhausted = False
        self.candidate_checks = 0

    @property
    def selection_space(self) -> int:
        total = 1
        for c in self.classes:
            total *= len(c.members) + 1
        return total

    def _advance(self) -> None:
        for pos in range(len(self.digits) - 1, -1, -1):
            self.digits[pos] += 1
            if self.digits[pos] <= len(self._members[pos]):
                return
            self.digits[pos] = 0
        self.exhausted = True

    def __iter__(self):
        return self

    def __next__(self) -> PartialSolution:
        view = self.view
        i = self.level
        tstar = self.node.mask
        edges_next = view.edges_upto[i + 1]
        while not self.exhausted:
            x = 0
            size = 0
            for members, digit in zip(self._members, self.digits):
                if digit:
                    x |= members[digit - 1]
                    size += 1
            self._advance()
            self.candidate_checks += 1
            t = tstar | x
            if not hits_all(edges_next, t) or private_owners(edges_next, t) != t:
                continue
            if view.parent_mask(t, i) != tstar:
                continue
            if size > self.new_count:
                raise InvariantViolation(
                    f"accepted selection of size {size} exceeds {self.new_count} new edges")
            return PartialSolution(i + 1, vertices_of(t), t)
        raise StopIteration


def children_of(H: Hypergraph, ordering, node, view: LevelView | None = None) -> ChildrenCursor:
    """Cursor over children(T*, i); ``node`` is a PartialSolution or (T*, i)."""
    if not isinstance(node, PartialSolution):
        tstar, i = node
        node = PartialSolution(i, frozenset(tstar))
    view = view or LevelView(H, ordering)
    return ChildrenCursor(view, node)
