"""Exit criteria for the package, one test per criterion.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion
is printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""

import subprocess
import sys
import time
from contextlib import contextmanager
from functools import lru_cache

import pytest

from corpus import ACCEPTANCE_LINES, colored_graphs, graph_corpus, hypergraph_corpus
from hyperdual import (
    brute_force_mds,
    brute_force_tr,
    children_of,
    closed_neighborhood_hypergraph,
    enumerate_mds,
    enumerate_tr_auto,
    gen_mis_reduction,
    gen_pendant_clique,
    graph_degeneracy_ordering,
    mis_oracle,
    parent,
    serialize_graph,
    serialize_hypergraph,
    strong_ordering,
    verify_ordering,
    weak_ordering,
)
from hyperdual.cli import run as cli_run
from hyperdual.instances import serialize_colors
from hyperdual.transversal import LevelView

from oracles import min_over_orderings


@contextmanager
def criterion(tag, title):
    start = time.perf_counter()
    notes = []
    try:
        yield notes
    except BaseException as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        line = f"FAIL  {tag:<3} {title} ({time.perf_counter() - start:.1f}s): {msg[:160]}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    detail = "; ".join(notes)
    line = f"PASS  {tag:<3} {title} ({time.perf_counter() - start:.1f}s){': ' + detail if detail else ''}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def canon(sets):
    return sorted(tuple(sorted(s)) for s in sets)


def weak_bound(n, d, k):
    return 2 * (n + 1) * ((k + 1) ** (2**d) + 1)


@lru_cache(maxsize=None)
def levels(idx):
    """(ordering, view, [Tr(H_0), ..., Tr(H_n)]) for corpus instance idx."""
    H = hypergraph_corpus()[idx].H
    order = weak_ordering(H)
    view = LevelView(H, order)
    return order, view, [brute_force_tr(view.level_hypergraph(i)) for i in range(H.n + 1)]


def corpus_indices(max_n=None):
    return [j for j, inst in enumerate(hypergraph_corpus()) if max_n is None or inst.H.n <= max_n]


def test_criterion_1_oracle_equivalence():
    with criterion("1", "engine output equals brute force on the corpus") as notes:
        corpus = hypergraph_corpus()
        n_random = sum(inst.name.startswith("random") for inst in corpus)
        n_mis = sum(inst.name.startswith("mis") for inst in corpus)
        assert n_random >= 500, n_random
        assert {"PC(2)", "PC(3)", "PC(4)", "PC(5)", "H6"} <= {inst.name for inst in corpus}
        assert n_mis > 0
        start = time.perf_counter()
        bad = []
        for inst in corpus:
            out = list(enumerate_tr_auto(inst.H))
            if len(out) != len(set(out)) or canon(out) != canon(brute_force_tr(inst.H)):
                bad.append(inst.name)
        elapsed = time.perf_counter() - start
        assert not bad, f"mismatches: {bad[:5]}"
        assert elapsed < 60, f"{elapsed:.1f}s"
        notes.append(f"{len(corpus)} instances ({n_random} random, {n_mis} reduction), 0 mismatches")


def test_criterion_2_parent_and_child_lemmas():
    with criterion("2", "parent lands in Tr(H_i); child dichotomy") as notes:
        checked = 0
        for j in corpus_indices():
            order, view, trs = levels(j)
            H = view.H
            for i in range(H.n):
                prev, nxt = set(trs[i]), set(trs[i + 1])
                for T in trs[i + 1]:
                    assert parent(H, order, T, i + 1, view=view) in prev, (j, i, T)
                    checked += 1
                for Ts in trs[i]:
                    if Ts in nxt:
                        assert parent(H, order, Ts, i + 1, view=view) == Ts
                    else:
                        grown = Ts | {view.vertex(i + 1)}
                        assert grown in nxt, (j, i, Ts)
                        assert parent(H, order, grown, i + 1, view=view) == Ts
                    checked += 1
        notes.append(f"{checked} checks")


def test_criterion_3_partition():
    with criterion("3", "children partition each next level (n <= 10)") as notes:
        idx = corpus_indices(max_n=10)
        for j in idx:
            order, view, trs = levels(j)
            for i in range(view.n):
                union = []
                for Ts in trs[i]:
                    union.extend(c.vertices for c in children_of(view.H, order, (Ts, i), view=view))
                assert canon(union) == canon(trs[i + 1]), (hypergraph_corpus()[j].name, i)
        notes.append(f"{len(idx)} instances")


def test_criterion_4_structure(tmp_path):
    with criterion("4", "trace-class and selection structure; no exit 3") as notes:
        nodes = 0
        for j in corpus_indices():
            order, view, trs = levels(j)
            H = view.H
            d, k = order.d, H.dimension
            for i in range(H.n):
                for Ts in trs[i]:
                    cur = children_of(H, order, (Ts, i), view=view)
                    nodes += 1
                    assert len(cur.all_classes) <= 2**d
                    assert all(len(c.members) <= k for c in cur.all_classes)
                    for child in cur:
                        X = child.vertices - Ts
                        assert len(X) <= d
                        assert all(len(X & set(c.members)) <= 1 for c in cur.all_classes)
        codes = {}
        for j, inst in enumerate(hypergraph_corpus()):
            path = tmp_path / f"{j}.hg"
            path.write_text(serialize_hypergraph(inst.H))
            code = cli_run(["tr", str(path), "--check", "--stats"],
                           stdout=_Sink(), stderr=_Sink())
            codes[code] = codes.get(code, 0) + 1
        assert codes.get(3, 0) == 0 and set(codes) == {0}, codes
        notes.append(f"{nodes} nodes; {sum(codes.values())} CLI runs, 0 exit-3")


class _Sink:
    def write(self, s):
        return len(s)

    def flush(self):
        pass


def test_criterion_5_delay_bound():
    with criterion("5", "max delay <= 2(n+1)((k+1)^(2^d)+1), stack <= n+1") as notes:
        runs = 0
        worst = 0.0
        for inst in hypergraph_corpus():
            H = inst.H
            run = enumerate_tr_auto(H)
            list(run)
            c = run.counters
            bound = weak_bound(H.n, weak_ordering(H).d, H.dimension)
            assert max(c.per_output_delay) <= bound, inst.name
            assert c.max_stack_depth <= H.n + 1, inst.name
            worst = max(worst, max(c.per_output_delay) / bound)
            runs += 1
        for G in graph_corpus():
            run = enumerate_mds(G)
            list(run)
            N, _ = closed_neighborhood_hypergraph(G)
            d = verify_ordering(N, graph_degeneracy_ordering(G).order, "weak")
            assert max(run.counters.per_output_delay) <= weak_bound(G.n, d, N.dimension)
            assert run.counters.max_stack_depth <= G.n + 1
            runs += 1
        notes.append(f"{runs} runs, worst delay/bound ratio {worst:.3f}")


def test_criterion_6_degeneracy():
    with criterion("6", "greedy degeneracy exact; weak <= strong; PC(3); |E| <= dn") as notes:
        small = 0
        for inst in hypergraph_corpus():
            H = inst.H
            w, s = weak_ordering(H), strong_ordering(H)
            assert w.d <= s.d, inst.name
            assert H.m <= w.d * H.n, inst.name
            if H.n <= 8:
                assert w.d == min_over_orderings(H.edges, H.n, "weak"), inst.name
                assert s.d == min_over_orderings(H.edges, H.n, "strong"), inst.name
                small += 1
        pc3 = gen_pendant_clique(3)
        assert weak_ordering(pc3).d == 1
        assert strong_ordering(pc3).d == 2
        notes.append(f"{small} instances with n <= 8 checked exhaustively")


def test_criterion_7a_mds_oracle():
    with criterion("7a", "enumerate_mds equals brute-force dominating sets") as notes:
        graphs = graph_corpus()
        assert len(graphs) >= 200 and max(G.n for G in graphs) <= 12
        for G in graphs:
            out = list(enumerate_mds(G))
            assert len(out) == len(set(out))
            assert canon(out) == canon(brute_force_mds(G)), serialize_graph(G)
        notes.append(f"{len(graphs)} graphs")


def test_criterion_7b_dimension_bound():
    with criterion("7b", "dimension(N(G)) <= max degree + 1"):
        for G in graph_corpus():
            N, _ = closed_neighborhood_hypergraph(G)
            assert N.dimension <= G.max_degree + 1


def test_criterion_7c_ordering_transfer():
    with criterion("7c", "weak score of graph ordering on N(G) <= graph degeneracy"):
        bad = []
        for G in graph_corpus():
            o = graph_degeneracy_ordering(G)
            N, _ = closed_neighborhood_hypergraph(G)
            score = verify_ordering(N, o.order, "weak")
            if score > o.d:
                bad.append((G.n, len(G.edges), score, o.d))
        assert not bad, f"{len(bad)}/{len(graph_corpus())} graphs exceed d_G, e.g. (n, m, score, d_G) = {bad[0]}"


def test_criterion_8_reduction_correspondence():
    with criterion("8", "reduction children = {T*+v} + multicolored independent sets") as notes:
        count = {2: 0, 3: 0}
        for cg in colored_graphs():
            H, ordering, node = gen_mis_reduction(cg)
            got = [c.vertices for c in children_of(H, ordering, node)]
            want = [node.vertices | {H.n}] + [node.vertices | M for M in mis_oracle(cg)]
            assert len(got) == len(set(got))
            assert canon(got) == canon(want), serialize_graph(cg.graph)
            count[cg.k] += 1
        assert count[2] and count[3]
        notes.append(f"{count[2]} two-colored, {count[3]} three-colored graphs")


def test_criterion_9_determinism(tmp_path):
    with criterion("9", "CLI stdout is byte-identical across runs") as notes:
        hg = tmp_path / "h.hg"
        hg.write_text(serialize_hypergraph(gen_pendant_clique(4)))
        g = tmp_path / "g.g"
        cg = colored_graphs()[-1]
        g.write_text(serialize_graph(cg.graph))
        colors = tmp_path / "c.txt"
        colors.write_text(serialize_colors(cg))
        commands = [
            ["tr", str(hg), "--stats", "--check"],
            ["tr", str(hg), "--limit", "3"],
            ["mds", str(g), "--stats"],
            ["degeneracy", str(hg)],
            ["oracle", str(hg)],
            ["gen", "pendant-clique", "--k", "5"],
            ["gen", "random", "--n", "12", "--d", "3", "--k", "4", "--seed", "99"],
            ["gen", "mis", "--graph", str(g), "--colors", str(colors)],
        ]
        for argv in commands:
            outs = [subprocess.run([sys.executable, "-m", "hyperdual", *argv],
                                   capture_output=True, check=True).stdout for _ in range(2)]
            assert outs[0] == outs[1], argv
            assert outs[0], argv
        notes.append(f"{len(commands)} subcommand invocations")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
