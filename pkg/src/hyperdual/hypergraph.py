"""Immutable hypergraphs and graphs, their sub-structures, and text I/O.

Vertices are the integers ``1..n``.  A vertex set is carried internally as a
Python ``int`` bit mask (bit ``v`` set for vertex ``v``); every public function
also accepts and returns ordinary sets.  Edges are kept in canonical order
(lexicographic by sorted vertex list) and an edge id is its position in that
order.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    BadHeader,
    BadToken,
    EmptyEdge,
    SelfLoop,
    TrailingData,
    TruncatedInput,
    VertexOutOfRange,
)

__all__ = [
    "Hypergraph",
    "Graph",
    "mask_of",
    "vertices_of",
    "iter_bits",
    "parse_hypergraph",
    "serialize_hypergraph",
    "parse_graph",
    "serialize_graph",
    "induced",
    "trace",
    "dimension",
    "max_degree",
    "incident_edges",
]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertices_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


class Hypergraph:
    """A set of distinct nonempty edges over a vertex set contained in 1..n.

    ``vertices`` defaults to all of ``1..n``; induced and trace views keep the
    original vertex ids and only shrink the vertex set.  Duplicate edges are
    dropped on construction and counted in ``dedup_count``.
    """

    __slots__ = ("n", "vertices", "edges", "edge_masks", "vertex_mask",
                 "_incidence", "dedup_count")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = (),
                 vertices: Iterable[int] | None = None):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        if vertices is None:
            self.vertices = frozenset(range(1, n + 1))
        else:
            self.vertices = frozenset(vertices)
            if any(not 1 <= v <= n for v in self.vertices):
                raise VertexOutOfRange()
        self.vertex_mask = mask_of(self.vertices)

        seen = set()
        raw = 0
        for e in edges:
            edge = tuple(sorted(set(e)))
            if not edge:
                raise EmptyEdge()
            if any(v not in self.vertices for v in edge):
                raise VertexOutOfRange()
            raw += 1
            seen.add(edge)
        self.edges: tuple[tuple[int, ...], ...] = tuple(sorted(seen))
        self.dedup_count = raw - len(self.edges)
        self.edge_masks: tuple[int, ...] = tuple(mask_of(e) for e in self.edges)

        incidence: list[list[int]] = [[] for _ in range(n + 1)]
        for eid, e in enumerate(self.edges):
            for v in e:
                incidence[v].append(eid)
        self._incidence = tuple(tuple(ids) for ids in incidence)

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Ids of the edges containing ``v``, ascending."""
        return self._incidence[v]

    def degree(self, v: int) -> int:
        return len(self._incidence[v])

    @property
    def dimension(self) -> int:
        return max(map(len, self.edges), default=0)

    @property
    def max_degree(self) -> int:
        return max((len(self._incidence[v]) for v in self.vertices), default=0)

    def edge_sets(self) -> set[frozenset[int]]:
        return {frozenset(e) for e in self.edges}

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.vertices, self.edges) == (other.n, other.vertices, other.edges)

    def __hash__(self):
        return hash((self.n, self.vertices, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={[list(e) for e in self.edges]})"


class Graph:
    """Simple undirected graph on vertices 1..n."""

    __slots__ = ("n", "adjacency", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRange()
            if u == v:
                raise SelfLoop()
            adj[u].add(v)
            adj[v].add(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (u, v) for u in range(1, n + 1) for v in self.adjacency[u] if u < v
        )

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adjacency[v]) | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(self.adjacency[v]) for v in range(1, self.n + 1)), default=0)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def induced(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """H[S]: the edges of H lying entirely inside S."""
    S = frozenset(S)
    s = mask_of(S)
    return Hypergraph(H.n, (e for e, em in zip(H.edges, H.edge_masks) if em & ~s == 0), S)


def trace(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """H|S: the distinct nonempty intersections of edges of H with S."""
    S = frozenset(S)
    return Hypergraph(H.n, (inter for e in H.edges if (inter := S.intersection(e))), S)


def dimension(H: Hypergraph) -> int:
    return H.dimension


def max_degree(H: Hypergraph) -> int:
    return H.max_degree


def incident_edges(H: Hypergraph, v: int) -> tuple[int, ...]:
    return H.incident_edges(v)


# --- text formats ----------------------------------------------------------

def _lines(text) -> list[str]:
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii")
    pieces = text.split("\n")
    if pieces and pieces[-1] == "":
        pieces.pop()
    return [p.rstrip("\r") for p in pieces]


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise BadToken(lineno) from None


def _read_records(text) -> tuple[int, int, list[tuple[int, list[int]]]]:
    """Split a ``n m`` + m-line file into its header and numbered records."""
    lines = _lines(text)
    idx = 0
    header = None
    while idx < len(lines):
        line = lines[idx].strip()
        idx += 1
        if not line or line.startswith("#"):
            continue
        header = line.split()
        break
    if header is None or len(header) != 2:
        raise BadHeader()
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise BadHeader() from None
    if n < 0 or m < 0:
        raise BadHeader()

    records = []
    while len(records) < m:
        if idx >= len(lines):
            raise TruncatedInput(idx + 1)
        line = lines[idx].strip()
        idx += 1
        if line.startswith("#"):
            continue
        records.append((idx, _ints(line, idx)))
    for rest in range(idx, len(lines)):
        line = lines[rest].strip()
        if line and not line.startswith("#"):
            raise TrailingData(rest + 1)
    return n, m, records


def parse_hypergraph(text) -> Hypergraph:
    """Parse the ``n m`` hypergraph format; ``text`` may be str or bytes.

    Raises EmptyEdge(line) / VertexOutOfRange(line) with 1-based physical
    line numbers, BadHeader for a missing or malformed first data line.
    """
    n, _, records = _read_records(text)
    edges = []
    for lineno, verts in records:
        if not verts:
            raise EmptyEdge(lineno)
        if any(not 1 <= v <= n for v in verts):
            raise VertexOutOfRange(lineno)
        edges.append(verts)
    return Hypergraph(n, edges)


def serialize_hypergraph(H: Hypergraph) -> str:
    out = [f"{H.n} {H.m}"]
    out.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(out) + "\n"


def parse_graph(text) -> Graph:
    """Parse ``n m`` followed by m lines ``u v``; parallel edges collapse."""
    n, _, records = _read_records(text)
    edges = []
    for lineno, verts in records:
        if len(verts) != 2:
            raise BadToken(lineno)
        u, v = verts
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexOutOfRange(lineno)
        if u == v:
            raise SelfLoop(lineno)
        edges.append((u, v))
    return Graph(n, edges)


def serialize_graph(G: Graph) -> str:
    out = [f"{G.n} {len(G.edges)}"]
    out.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(out) + "\n"
