import math
from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holescope import graph as gr
from holescope import triangles as tr
from holescope.jaco import build_jaco

from .conftest import graphs


def nx_graph(G):
    H = nx.Graph()
    H.add_nodes_from(range(1, G.n + 1))
    H.add_edges_from(G.edge_list())
    return H


class TestOracle:
    def test_k4(self):
        assert tr.triangles_oracle(gr.complete(4)) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]

    def test_c5_empty(self):
        assert tr.triangles_oracle(gr.cycle(5)) == []

    def test_jaco5_single_triangle(self):
        assert tr.triangles_oracle(build_jaco(5).underlying) == [(3, 4, 5)]

    def test_size_guard(self, monkeypatch):
        G = gr.empty(20)
        with pytest.raises(tr.OracleSizeError):
            tr.triangles_oracle(G, max_n=10)
        monkeypatch.setenv("HOLESCOPE_MAX_N", "10")
        with pytest.raises(tr.OracleSizeError):
            tr.triangles_oracle(G)
        monkeypatch.setenv("HOLESCOPE_MAX_N", "20")
        assert tr.triangles_oracle(G) == []

    def test_matches_networkx(self):
        for s in range(10):
            G = gr.gnp(25, 0.3, s)
            assert len(tr.triangles_oracle(G)) == sum(nx.triangles(nx_graph(G)).values()) // 3


class TestForward:
    def test_k7(self, backend):
        assert len(tr.triangles_forward(gr.complete(7), backend=backend)) == 35

    def test_edgeless(self, backend):
        assert tr.triangles_forward(gr.empty(6), backend=backend) == []
        assert tr.triangles_forward(gr.empty(0), backend=backend) == []

    @pytest.mark.parametrize("tie_break", tr.TIE_BREAKS)
    def test_agrees_with_oracle_200_seeds(self, backend, tie_break):
        for seed in range(200):
            G = gr.gnp(64, 0.2, seed)
            assert tr.triangles_forward(G, tie_break, backend) == tr.triangles_oracle(G)

    def test_count_matches_list(self, backend):
        G = gr.gnp(200, 0.1, 5)
        assert tr.count_triangles(G, backend=backend) == len(tr.triangles_forward(G, backend=backend))

    def test_bad_tie_break(self):
        with pytest.raises(ValueError):
            tr.triangles_forward(gr.complete(3), tie_break="random")

    def test_rank_orders_by_degree_then_index(self):
        G = gr.star(3)  # centre has degree 3, leaves degree 1
        order = lambda rank: sorted(range(1, G.n + 1), key=lambda v: rank[v])
        assert order(tr.vertex_rank(G)) == [2, 3, 4, 1]
        assert order(tr.vertex_rank(G, "reverse")) == [4, 3, 2, 1]


class TestH:
    @pytest.mark.parametrize("n", range(3, 13))
    def test_complete(self, n):
        assert tr.h(gr.complete(n)) == comb(n, 3)

    @pytest.mark.parametrize("n", range(4, 12))
    def test_path_cycle_zero(self, n):
        assert tr.h(gr.path(n)) == 0
        assert tr.h(gr.cycle(n)) == 0

    def test_disjoint_union_additive(self):
        parts = [gr.complete(5), gr.cycle(3), gr.gnp(15, 0.4, 2), gr.path(4)]
        assert tr.h(gr.disjoint_union(*parts)) == sum(tr.h(p) for p in parts)


class TestPrimitiveDegrees:
    @pytest.mark.parametrize("n", range(3, 11))
    def test_complete(self, n):
        dp = tr.primitive_degrees(gr.complete(n))
        assert set(dp) == {comb(n - 1, 2)} == {sum(range(1, n - 1))}

    @pytest.mark.parametrize("n", range(4, 10))
    def test_path_cycle(self, n):
        assert set(tr.primitive_degrees(gr.path(n))) == {0}
        assert set(tr.primitive_degrees(gr.cycle(n))) == {0}

    @pytest.mark.parametrize("n", range(4, 11))
    def test_complete_recurrence(self, n):
        assert tr.primitive_degrees(gr.complete(n))[1] - tr.primitive_degrees(gr.complete(n - 1))[1] == n - 2

    def test_one_based_indexing(self):
        dp = tr.primitive_degrees(build_jaco(5).underlying)
        assert list(dp) == [0, 0, 1, 1, 1]
        assert dp[3] == 1
        with pytest.raises(IndexError):
            dp[0]

    def test_oracle_path_matches(self):
        G = gr.gnp(30, 0.3, 9)
        assert tr.primitive_degrees(G) == tr.primitive_degrees(G, oracle=True)


class TestGirth:
    def test_cycle(self, backend):
        assert tr.girth(gr.cycle(5), backend=backend) == 5

    def test_tree_conventions(self, backend):
        T = gr.star(4)
        assert tr.girth(T, "paper", backend) == 0
        assert tr.girth(T, "infinity", backend) == math.inf

    def test_union_sums_component_girths(self, backend):
        U = gr.disjoint_union(gr.cycle(3), gr.cycle(4))
        assert tr.girth(U, "paper", backend) == 7
        assert tr.girth(U, "infinity", backend) == 3

    def test_forest_plus_cycle(self, backend):
        U = gr.disjoint_union(gr.path(5), gr.cycle(6))
        assert tr.girth(U, "paper", backend) == 6

    def test_bad_convention(self):
        with pytest.raises(ValueError):
            tr.girth(gr.cycle(3), "zero")

    def test_matches_networkx(self, backend):
        for s in range(30):
            G = gr.gnp(18, 0.15, s)
            got = tr.girth(G, "infinity", backend)
            want = nx.girth(nx_graph(G))
            assert got == want


class TestHasPrimitiveHole:
    def test_basic(self):
        assert tr.has_primitive_hole(gr.complete(3))
        assert not tr.has_primitive_hole(gr.cycle(4))

    def test_gnp_matches_h(self):
        for s in range(40):
            G = gr.gnp(12, 0.2, s)
            assert tr.has_primitive_hole(G) == (len(tr.triangles_oracle(G)) > 0)


def test_format_triangles():
    assert tr.format_triangles([(2, 3, 4), (1, 2, 3)]) == "1 2 3\n2 3 4\n"


def test_triangle_golden_file():
    # J*_7: triangles frozen from the oracle
    text = tr.format_triangles(tr.triangles_forward(build_jaco(7).underlying))
    assert text == "3 4 5\n4 5 6\n4 5 7\n4 6 7\n5 6 7\n"


# -- properties ---------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_forward_equals_oracle(G):
    oracle = tr.triangles_oracle(G)
    assert tr.triangles_forward(G) == oracle
    assert tr.triangles_forward(G, "reverse", "python") == oracle


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_handshake(G):
    assert tr.primitive_degrees(G).total() == 3 * tr.h(G)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_range_bound(G):
    assert 0 <= tr.h(G) <= comb(G.n, 3)


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_monotone_under_subgraphs(G, data):
    S = data.draw(st.lists(st.integers(1, max(G.n, 1)), unique=True)) if G.n else []
    assert tr.h(gr.induced_subgraph(G, S)) <= tr.h(G)
    if G.m:
        e = data.draw(st.sampled_from(G.edge_list()))
        assert tr.h(gr.delete_edge(G, e)) <= tr.h(G)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10), st.data())
def test_deletion_accounting(G, data):
    if not G.n:
        return
    v = data.draw(st.integers(1, G.n))
    assert tr.h(G) - len(tr.triangles_oracle(gr.delete_vertex(G, v))) == tr.primitive_degrees(G)[v]


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_girth_hole_consistency(G):
    per = tr.component_girths(G)
    assert (tr.h(G) >= 1) == (3 in per)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_edge_incidence_bound(G):
    # every edge closes at most n - 2 triangles, so 3h <= (n - 2) m
    if G.n >= 2:
        assert 3 * tr.h(G) <= (G.n - 2) * G.m


def test_size_edge_bound_counterexamples():
    # h(G) <= |E(G)| holds for small complete graphs and fails from K_6 on
    assert [(n, tr.h(gr.complete(n)), gr.complete(n).m) for n in (4, 5, 6)] == [(4, 4, 6), (5, 10, 10), (6, 20, 15)]
    # and the strict form already fails at K_5
    assert not tr.h(gr.complete(5)) < gr.complete(5).m


def test_size_edge_bound_holds_on_sparse_corpus():
    for s in range(50):
        G = gr.gnp(20, 0.15, s)
        if G.m:
            assert tr.h(G) < G.m


def test_oracle_is_brute_force_over_triples():
    # the oracle must list exactly the triples that pass a direct edge test
    G = gr.gnp(14, 0.5, 11)
    want = [t for t in combinations(range(1, G.n + 1), 3) if all(G.has_edge(a, b) for a, b in combinations(t, 2))]
    assert tr.triangles_oracle(G) == want
