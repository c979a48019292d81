"""Command-line entry point.

Solutions go to stdout, one per line and flushed as they are found; stats
and diagnostics go to stderr.  Exit codes: 0 success, 2 usage or input
error, 3 runtime invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence

from .degeneracy import strong_ordering, weak_ordering, check_permutation
from .domination import closed_neighborhood_hypergraph, graph_degeneracy_ordering
from .engine import Enumeration, enumerate_tr
from .errors import HypergraphError, InvariantViolation
from .hypergraph import (
    Hypergraph,
    parse_graph,
    parse_hypergraph,
    serialize_hypergraph,
)
from .instances import (
    ColoredGraph,
    gen_mis_reduction,
    gen_pendant_clique,
    gen_random_degenerate,
    parse_colors,
)
from .transversal import brute_force_tr, is_minimal_transversal

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    limit: int | None = None
    check: bool = False
    stats: bool = False
    ordering_file: str | None = None
    ordering_out: str | None = None
    mode: str = "weak"
    family: str | None = None
    k: int | None = None
    n: int | None = None
    d: int | None = None
    seed: int | None = None
    graph: str | None = None
    colors: str | None = None

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "RunConfig":
        cfg = cls(**{k: v for k, v in vars(ns).items() if k in cls.__dataclass_fields__})
        cfg.validate()
        return cfg

    def validate(self) -> None:
        stdin_users = [p for p in (self.input, self.ordering_file, self.graph, self.colors) if p == "-"]
        if len(stdin_users) > 1:
            raise UsageError("standard input can feed only one file argument")
        if self.limit is not None and self.limit < 0:
            raise UsageError("--limit must be non-negative")
        if self.command == "gen":
            needed = {"pendant-clique": ("k",), "mis": ("graph", "colors"),
                      "random": ("n", "d", "k", "seed")}[self.family]
            missing = [f"--{name}" for name in needed if getattr(self, name) is None]
            if missing:
                raise UsageError(f"gen {self.family} requires {' '.join(missing)}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hyperdual", description="Enumerate minimal transversals and minimal dominating sets.")
    sub = p.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("tr", help="enumerate minimal transversals of a hypergraph")
    tr.add_argument("input", help="hypergraph file, or - for stdin")
    tr.add_argument("--ordering-file", help="elimination ordering, one vertex per line")
    mds = sub.add_parser("mds", help="enumerate minimal dominating sets of a graph")
    mds.add_argument("input", help="graph file, or - for stdin")
    for sp in (tr, mds):
        sp.add_argument("--limit", type=int, help="stop after N solutions")
        sp.add_argument("--check", action="store_true", help="re-validate every solution")
        sp.add_argument("--stats", action="store_true", help="print work counters to stderr")

    deg = sub.add_parser("degeneracy", help="weak/strong degeneracy, dimension, max degree")
    deg.add_argument("input")
    deg.add_argument("--ordering-out", help="write the elimination ordering here")
    deg.add_argument("--mode", choices=("weak", "strong"), default="weak",
                     help="which ordering --ordering-out writes")

    ora = sub.add_parser("oracle", help="brute-force minimal transversals (n <= 20)")
    ora.add_argument("input")

    gen = sub.add_parser("gen", help="write a generated hypergraph to stdout")
    gen.add_argument("family", choices=("pendant-clique", "mis", "random"))
    gen.add_argument("--k", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--d", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--graph")
    gen.add_argument("--colors")
    return p


def _read(path: str, stdin) -> bytes:
    if path == "-":
        data = stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read()
        return data.encode() if isinstance(data, str) else data
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot open {path}: {exc.strerror}") from None


def _parse_ordering(data: bytes) -> list[int]:
    out = []
    for line in data.decode("ascii").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            try:
                out.extend(int(tok) for tok in line.split())
            except ValueError:
                raise UsageError("ordering file must contain vertex ids") from None
    return out


def _fmt(solution) -> str:
    return " ".join(map(str, sorted(solution)))


def _stream(run: Enumeration, H: Hypergraph, cfg: RunConfig, out, err) -> None:
    for T in run:
        if cfg.check and not is_minimal_transversal(H, T):
            raise InvariantViolation(f"emitted set {_fmt(T)} is not a minimal transversal")
        out.write(_fmt(T) + "\n")
        out.flush()
    if cfg.stats:
        c = run.counters
        err.write(f"solutions={c.solutions} "
                  f"nodes={c.nodes_expanded} candidate_checks={c.candidate_checks} "
                  f"max_delay={c.max_delay} bound={run.bound}\n")
        err.flush()


def _dispatch(cfg: RunConfig, stdin, out, err) -> None:
    if cfg.command == "tr":
        H = parse_hypergraph(_read(cfg.input, stdin))
        if cfg.ordering_file:
            order = check_permutation(H.n, _parse_ordering(_read(cfg.ordering_file, stdin)))
        else:
            order = weak_ordering(H)
        _stream(enumerate_tr(H, order, cfg.limit), H, cfg, out, err)

    elif cfg.command == "mds":
        G = parse_graph(_read(cfg.input, stdin))
        H, _ = closed_neighborhood_hypergraph(G)
        _stream(enumerate_tr(H, graph_degeneracy_ordering(G), cfg.limit), H, cfg, out, err)

    elif cfg.command == "degeneracy":
        H = parse_hypergraph(_read(cfg.input, stdin))
        weak, strong = weak_ordering(H), strong_ordering(H)
        out.write(f"weak={weak.d} strong={strong.d} dimension={H.dimension} "
                  f"max_degree={H.max_degree}\n")
        if cfg.ordering_out:
            chosen = weak if cfg.mode == "weak" else strong
            try:
                with open(cfg.ordering_out, "w") as fh:
                    fh.write("".join(f"{v}\n" for v in chosen.order))
            except OSError as exc:
                raise UsageError(f"cannot write {cfg.ordering_out}: {exc.strerror}") from None

    elif cfg.command == "oracle":
        H = parse_hypergraph(_read(cfg.input, stdin))
        for T in brute_force_tr(H):
            out.write(_fmt(T) + "\n")
            out.flush()

    elif cfg.command == "gen":
        if cfg.family == "pendant-clique":
            H = gen_pendant_clique(cfg.k)
        elif cfg.family == "random":
            H = gen_random_degenerate(cfg.n, cfg.d, cfg.k, cfg.seed)
        else:
            G = parse_graph(_read(cfg.graph, stdin))
            H = gen_mis_reduction(ColoredGraph(G, parse_colors(_read(cfg.colors, stdin), G.n))).hypergraph
        out.write(serialize_hypergraph(H))


def run(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
        cfg = RunConfig.from_namespace(ns)
        _dispatch(cfg, stdin, out, err)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except InvariantViolation as exc:
        err.write(f"error: invariant violated: {exc}\n")
        return EXIT_INVARIANT
    except (HypergraphError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
