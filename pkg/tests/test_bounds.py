from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from tuza import bounds
from tuza.coloring import konig_color, vizing_color
from tuza.errors import DensityTooLow, DomainError, MissingCrossEdge, NotSplit
from tuza.graph import Graph, PartitionedGraph, enumerate_triangles, validate_packing
from tuza.harness import gen_split, gen_tripartite
from tuza.oracles import exact_nu, exact_tau


def test_extend_packing_examples():
    pg = PartitionedGraph.complete_split(3, 3)
    x, y = [0, 1, 2], [3, 4, 5]
    col = vizing_color(pg.graph.induced(x))
    assert len(col) == 3
    assert len(bounds.extend_packing(pg.graph, x, y, col)) == 3
    assert bounds.extend_packing(pg.graph, x, [], col) == []

    g = Graph(5, [(0, 2), (0, 3), (1, 2), (1, 3)] + [(v, 4) for v in range(4)])
    col = konig_color(g.induced(range(4)), ([0, 1], [2, 3]))
    p = bounds.extend_packing(g, range(4), [4], col)
    assert len(p) == 2 and validate_packing(g, p)
    assert bounds.extend_packing_bound(4, 1, 2) == 2


def test_extend_packing_missing_cross_edge():
    g = Graph(4, [(0, 1), (0, 2), (1, 2)])
    with pytest.raises(MissingCrossEdge):
        bounds.extend_packing(g, [0, 1], [2, 3], [[(0, 1)]])


@given(st.integers(0, 8), st.integers(0, 8))
def test_complete_split_packing(k, s):
    p = bounds.complete_split_packing(k, s)
    g = PartitionedGraph.complete_split(k, s).graph
    assert validate_packing(g, p)
    assert all(sum(v < k for v in t) == 2 for t in p)
    assert len(p) >= bounds.complete_split_bound(k, s)


@pytest.mark.parametrize("k, s, size", [(3, 3, 3), (5, 2, 4), (1, 4, 0)])
def test_complete_split_examples(k, s, size):
    assert len(bounds.complete_split_packing(k, s)) == size


def test_nu_complete_formula():
    assert [bounds.nu_complete_formula(n) for n in range(2, 10)] == [0, 1, 1, 2, 4, 7, 8, 12]
    with pytest.raises(DomainError):
        bounds.nu_complete_formula(1)


def test_lower_bound_general_examples():
    assert bounds.lower_bound_general(Graph.complete(4)) == 1
    assert bounds.lower_bound_general(Graph.complete(7)) == 7
    assert bounds.lower_bound_general(Graph.complete_bipartite(3, 3)) == 0


def test_lower_bound_split_examples():
    assert bounds.lower_bound_split(PartitionedGraph.complete_split(3, 2)) == 2
    assert bounds.lower_bound_split(PartitionedGraph.complete_split(4, 4)) == 6
    isolated = PartitionedGraph(Graph.complete(3).union(Graph(5)),
                                [("clique", [0, 1, 2]), ("independent", [3, 4])])
    assert bounds.lower_bound_split(isolated) == 0
    with pytest.raises(NotSplit):
        bounds.lower_bound_split(PartitionedGraph.complete_multipartite([2, 2]))


def test_tripartite_factor_examples():
    assert bounds.tripartite_bound_factor(9, 27) == 1
    assert bounds.tripartite_bound_factor(6, 12) == 1
    assert bounds.tripartite_bound_factor(10, 30) == Fraction(5, 3)
    with pytest.raises(DensityTooLow):
        bounds.tripartite_bound_factor(4, 4)


def test_bollobas_examples():
    assert bounds.bollobas_triangle_bound(9, 27) == 27
    assert bounds.bollobas_triangle_bound(4, 4) == 0
    assert bounds.bollobas_triangle_bound(6, 12) == 8


def test_cut_upper_bound_examples():
    assert bounds.cut_upper_bound_tau(3, 3) == 1
    assert bounds.cut_upper_bound_tau(1, 0) == 0
    assert bounds.cut_upper_bound_tau(5, 10) == 4


def test_cut_upper_bound_fails_on_disconnected_graph():
    # triangle plus an isolated vertex: τ = 1 > 3/2 − 3/4; the bound needs connectivity
    g = Graph(4, [(0, 1), (0, 2), (1, 2)])
    assert exact_tau(g)[0] > bounds.cut_upper_bound_tau(g.n, g.m)


@given(graphs(max_n=9))
def test_general_lower_bound_below_nu(g):
    assert bounds.lower_bound_general(g) <= exact_nu(g)[0]


@given(graphs(max_n=9, min_n=1))
def test_cut_upper_bound_above_tau_on_connected(g):
    if g.is_connected():
        assert exact_tau(g)[0] <= bounds.cut_upper_bound_tau(g.n, g.m)


@given(st.integers(2, 10), st.integers(0, 2**32))
def test_split_lower_bound_below_nu(n, seed):
    pg = gen_split(n, int(np.random.default_rng(seed).integers(0, n)), seed)
    assert bounds.lower_bound_split(pg) <= exact_nu(pg.graph)[0]


@given(st.integers(3, 10), st.integers(0, 2**32), st.data())
def test_bollobas_below_triangle_count(n, seed, data):
    from tuza.harness import max_tripartite_edges
    m = data.draw(st.integers(n * n // 4 + 1, max_tripartite_edges(n)))
    g = gen_tripartite(n, m, seed).graph
    assert bounds.bollobas_triangle_bound(n, m) <= len(enumerate_triangles(g))


def test_all_bounds_keys():
    keys = bounds.all_bounds(PartitionedGraph.complete_split(3, 2))
    assert {"nu_lower_split", "tau_upper_clique", "nu_lower_general"} <= set(keys)
    tri = bounds.all_bounds(PartitionedGraph.complete_multipartite([3, 3, 3]))
    assert tri["tripartite_factor"] == 1 and tri["tau_upper_two_smallest"] == 9
    assert bounds.all_bounds(PartitionedGraph(Graph.complete(5)))["nu_complete"] == 2
    assert all(isinstance(v, Fraction) for v in tri.values())
