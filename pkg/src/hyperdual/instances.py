"""Deterministic instance generators.

Random families draw from :class:`SplitMix64` so that a seed yields the same
bytes on every platform and Python version.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, NamedTuple, Sequence

from .degeneracy import EliminationOrdering
from .errors import BadToken, NeedTwoColors, TooLargeForOracle, VertexOutOfRange
from .hypergraph import Graph, Hypergraph, _read_records
from .transversal import ORACLE_LIMIT, PartialSolution, canonical_sorted

__all__ = [
    "SplitMix64",
    "ColoredGraph",
    "MisReduction",
    "gen_pendant_clique",
    "gen_mis_reduction",
    "gen_random_degenerate",
    "gen_random_graph",
    "gen_random_colored_graph",
    "mis_oracle",
    "parse_colors",
    "serialize_colors",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator (Steele, Lea, Flood 2014)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def uniform(self) -> float:
        return (self.next() >> 11) / float(1 << 53)

    def sample(self, population: Sequence[int], size: int) -> list[int]:
        """``size`` distinct items via a partial Fisher-Yates shuffle."""
        pool = list(population)
        for j in range(size):
            r = j + self.below(len(pool) - j)
            pool[j], pool[r] = pool[r], pool[j]
        return pool[:size]

    def shuffle(self, items: list) -> None:
        for j in range(len(items) - 1, 0, -1):
            r = self.below(j + 1)
            items[j], items[r] = items[r], items[j]


@dataclass(frozen=True)
class ColoredGraph:
    """A graph whose vertices carry colors 1..k, every color used."""

    graph: Graph
    colors: tuple[int, ...]  # colors[v - 1] is the color of vertex v

    def __init__(self, graph: Graph, colors: Mapping[int, int] | Sequence[int]):
        if isinstance(colors, Mapping):
            if set(colors) != set(range(1, graph.n + 1)):
                raise ValueError("every vertex needs exactly one color")
            colors = [colors[v] for v in range(1, graph.n + 1)]
        colors = tuple(colors)
        if len(colors) != graph.n:
            raise ValueError("every vertex needs exactly one color")
        k = max(colors, default=0)
        if set(colors) != set(range(1, k + 1)):
            raise ValueError("colors must be 1..k with every class nonempty")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "colors", colors)

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def color(self, v: int) -> int:
        return self.colors[v - 1]

    def color_class(self, c: int) -> tuple[int, ...]:
        return tuple(v for v, cv in enumerate(self.colors, 1) if cv == c)


class MisReduction(NamedTuple):
    """Children-generation instance built from a colored graph.

    The apex vertex (the one every color edge contains) is ``hypergraph.n``.
    """

    hypergraph: Hypergraph
    ordering: EliminationOrdering
    node: PartialSolution


def gen_pendant_clique(k: int) -> Hypergraph:
    """Clique on 1..k with a fresh vertex added to each clique edge.

    Pendants are numbered k+1, k+2, ... following the pairs (i, j) in
    lexicographic order.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    edges = []
    u = k
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            u += 1
            edges.append((i, j, u))
    return Hypergraph(u, edges)


def gen_mis_reduction(cg: ColoredGraph) -> MisReduction:
    """Hypergraph whose children at the last level encode multicolored
    independent sets of ``cg``.

    Graph vertices keep their ids 1..N; the vertex u_xy of the j-th graph
    edge (canonical order) is N+1+j; the apex is the last vertex.  Edges are
    one color edge per color (the class plus the apex) and {x, u_xy},
    {y, u_xy} per graph edge.  The ordering is the identity, so the apex
    comes last and the u_xy vertices right before it.
    """
    if cg.k < 2:
        raise NeedTwoColors("at least two colors are required")
    G = cg.graph
    N = G.n
    apex = N + len(G.edges) + 1
    edges = [cg.color_class(c) + (apex,) for c in range(1, cg.k + 1)]
    tstar = []
    for j, (x, y) in enumerate(G.edges):
        u = N + 1 + j
        tstar.append(u)
        edges.append((x, u))
        edges.append((y, u))
    H = Hypergraph(apex, edges)
    ordering = EliminationOrdering.scored(H, range(1, apex + 1), "weak")
    return MisReduction(H, ordering, PartialSolution(apex - 1, frozenset(tstar)))


def gen_random_degenerate(n: int, d: int, k: int, seed: int) -> Hypergraph:
    """Random hypergraph whose identity ordering has weak score at most d.

    Vertices are inserted in order 1..n.  Vertex i >= 2 draws a count
    c = below(d+1); for each of the c edges it draws a size
    s = 1 + below(min(k-1, i-1)) and s distinct earlier vertices (partial
    Fisher-Yates over [1..i-1]).  A duplicate edge is redrawn up to 8 times
    and then skipped.  Vertex 1 consumes no randomness.
    """
    if n < 1 or d < 1 or k < 2:
        raise ValueError("need n >= 1, d >= 1, k >= 2")
    rng = SplitMix64(seed)
    seen: set[tuple[int, ...]] = set()
    edges = []
    for i in range(2, n + 1):
        for _ in range(rng.below(d + 1)):
            for _attempt in range(8):
                size = 1 + rng.below(min(k - 1, i - 1))
                e = tuple(sorted(rng.sample(range(1, i), size) + [i]))
                if e not in seen:
                    seen.add(e)
                    edges.append(e)
                    break
    return Hypergraph(n, edges)


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with pairs visited in lexicographic order."""
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.uniform() < p]
    return Graph(n, edges)


def gen_random_colored_graph(n: int, k: int, p: float, seed: int) -> ColoredGraph:
    """Random graph with a balanced random k-coloring (needs n >= k)."""
    if n < k:
        raise ValueError("need at least one vertex per color")
    G = gen_random_graph(n, p, seed)
    rng = SplitMix64(seed ^ 0x5DEECE66D)
    colors = [j % k + 1 for j in range(n)]
    rng.shuffle(colors)
    return ColoredGraph(G, colors)


def mis_oracle(cg: ColoredGraph) -> list[frozenset[int]]:
    """All independent sets with exactly one vertex of each color."""
    G = cg.graph
    if G.n > ORACLE_LIMIT:
        raise TooLargeForOracle(f"{G.n} vertices > {ORACLE_LIMIT}")
    adj = [frozenset(a) for a in G.adjacency]
    found = []
    for pick in product(*(cg.color_class(c) for c in range(1, cg.k + 1))):
        if all(b not in adj[a] for idx, a in enumerate(pick) for b in pick[idx + 1:]):
            found.append(pick)
    return canonical_sorted(found)


def parse_colors(text, n: int) -> list[int]:
    """Color file: header ``n c`` (vertex count, line count), then ``v color`` lines."""
    count, _, records = _read_records(text)
    if count != n:
        raise VertexOutOfRange()
    colors = [0] * n
    for lineno, toks in records:
        if len(toks) != 2:
            raise BadToken(lineno)
        v, c = toks
        if not 1 <= v <= n or colors[v - 1] or c < 1:
            raise BadToken(lineno)
        colors[v - 1] = c
    if not all(colors):
        raise BadToken()
    return colors


def serialize_colors(cg: ColoredGraph) -> str:
    out = [f"{cg.graph.n} {cg.graph.n}"]
    out.extend(f"{v} {c}" for v, c in enumerate(cg.colors, 1))
    return "\n".join(out) + "\n"
