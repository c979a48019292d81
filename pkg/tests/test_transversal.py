from itertools import combinations

import pytest
from hypothesis import given, settings

from hyperdual import (
    Hypergraph,
    brute_force_tr,
    is_minimal_transversal,
    is_transversal,
    parent,
    private_edges,
    weak_ordering,
)
from hyperdual.errors import NotAMinimalTransversal, TooLargeForOracle, VertexNotInSet
from hyperdual.transversal import LevelView, PartialSolution

from oracles import greedy_parent, minimal_hitting_sets
from test_hypergraph import hypergraphs


def all_subsets(vs):
    vs = sorted(vs)
    for r in range(len(vs) + 1):
        for c in combinations(vs, r):
            yield frozenset(c)


class TestPredicates:
    def test_is_transversal(self, two_edges):
        assert is_transversal(two_edges, {2})
        assert not is_transversal(two_edges, {1})
        assert is_transversal(Hypergraph(3), set())

    def test_private_edges(self, two_edges):
        assert [two_edges.edges[e] for e in private_edges(two_edges, {1, 3}, 1)] == [(1, 2)]
        assert private_edges(two_edges, {1, 2}, 1) == frozenset()
        single = Hypergraph(1, [(1,)])
        assert private_edges(single, {1}, 1) == frozenset({0})

    def test_private_edges_requires_member(self, two_edges):
        with pytest.raises(VertexNotInSet):
            private_edges(two_edges, {1}, 2)

    def test_is_minimal(self, two_edges):
        assert is_minimal_transversal(two_edges, {1, 3})
        assert not is_minimal_transversal(two_edges, {1, 2, 3})
        assert is_minimal_transversal(two_edges, {2})

    @settings(max_examples=60)
    @given(hypergraphs(max_n=7))
    def test_private_edge_characterisation(self, H):
        """Minimal iff transversal and no proper subset is a transversal."""
        for T in all_subsets(H.vertices):
            by_inclusion = is_transversal(H, T) and not any(
                is_transversal(H, S) for S in all_subsets(T) if S != T)
            assert is_minimal_transversal(H, T) == by_inclusion


class TestOracle:
    def test_examples(self, two_edges):
        assert brute_force_tr(two_edges) == [frozenset({1, 3}), frozenset({2})]
        assert brute_force_tr(Hypergraph(3)) == [frozenset()]
        assert brute_force_tr(Hypergraph(2, [(1,), (2,)])) == [frozenset({1, 2})]

    def test_guard(self):
        with pytest.raises(TooLargeForOracle):
            brute_force_tr(Hypergraph(21))

    @settings(max_examples=60)
    @given(hypergraphs(max_n=8))
    def test_matches_inclusion_oracle(self, H):
        assert set(brute_force_tr(H)) == set(minimal_hitting_sets(H.edges, H.vertices))


class TestParent:
    def test_examples(self, two_edges):
        ident = [1, 2, 3]
        assert parent(two_edges, ident, {1, 3}, 3) == {1}
        assert parent(two_edges, ident, {2}, 3) == {2}
        assert parent(two_edges, ident, set(), 1) == set()

    def test_cross_check_with_reference(self, two_edges):
        assert greedy_parent([(1, 2)], [1, 2, 3], {1, 3}) == {1}

    def test_rejects_non_minimal(self, two_edges):
        with pytest.raises(NotAMinimalTransversal):
            parent(two_edges, [1, 2, 3], {1, 2, 3}, 3)
        with pytest.raises(NotAMinimalTransversal):
            parent(two_edges, [1, 2, 3], {1}, 3)

    def test_smallest_position_not_smallest_id(self):
        # In H_2 = {1,3} both 1 and 3 lack a private edge; the one earlier in
        # the ordering is dropped, leaving the other.
        H = Hypergraph(3, [(1, 3), (1, 2), (2, 3)])
        assert parent(H, [1, 3, 2], {1, 3}, 3) == {3}
        assert parent(H, [3, 1, 2], {1, 3}, 3) == {1}
        assert greedy_parent([(1, 3)], [1, 3, 2], {1, 3}) == {3}
        assert greedy_parent([(1, 3)], [3, 1, 2], {1, 3}) == {1}

    @settings(max_examples=50)
    @given(hypergraphs(max_n=8))
    def test_matches_reference_every_level(self, H):
        order = weak_ordering(H).order
        view = LevelView(H, order)
        for i in range(H.n):
            edges_i = view.level_hypergraph(i).edges
            for T in brute_force_tr(view.level_hypergraph(i + 1)):
                got = parent(H, order, T, i + 1, view=view)
                assert got == greedy_parent(edges_i, order, T)

    @settings(max_examples=50)
    @given(hypergraphs(max_n=8))
    def test_parent_lands_in_previous_level(self, H):
        order = weak_ordering(H).order
        view = LevelView(H, order)
        for i in range(H.n):
            prev = set(brute_force_tr(view.level_hypergraph(i)))
            for T in brute_force_tr(view.level_hypergraph(i + 1)):
                assert parent(H, order, T, i + 1, view=view) in prev

    @settings(max_examples=50)
    @given(hypergraphs(max_n=8))
    def test_child_dichotomy(self, H):
        order = weak_ordering(H).order
        view = LevelView(H, order)
        for i in range(H.n):
            nxt = set(brute_force_tr(view.level_hypergraph(i + 1)))
            for Ts in brute_force_tr(view.level_hypergraph(i)):
                if Ts in nxt:
                    assert parent(H, order, Ts, i + 1, view=view) == Ts
                else:
                    grown = Ts | {order[i]}
                    assert grown in nxt
                    assert parent(H, order, grown, i + 1, view=view) == Ts

    @given(hypergraphs(max_n=6))
    def test_deterministic(self, H):
        if H.n == 0:
            return
        order = weak_ordering(H).order
        for T in brute_force_tr(H):
            assert parent(H, order, T, H.n) == parent(H, order, T, H.n)


def test_partial_solution_mask():
    node = PartialSolution(2, {1, 3})
    assert node.mask == 0b1010
    assert PartialSolution.from_mask(2, 0b1010) == node
