from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, random_graph
from tuza.errors import NotSplit
from tuza.graph import Graph, PartitionedGraph, validate_hitting
from tuza.harness import gen_split
from tuza.hitting import (clique_edges_hitting, cut_complement_hitting, edwards_cut_target,
                          local_search_cut)


def test_clique_hitting_examples():
    assert len(clique_edges_hitting(PartitionedGraph.complete_split(3, 2))) == 3
    assert clique_edges_hitting(PartitionedGraph.complete_split(1, 4)) == []
    with pytest.raises(NotSplit):
        clique_edges_hitting(PartitionedGraph.complete_multipartite([2, 2, 2]))


@given(st.integers(1, 14), st.integers(0, 2**32))
def test_clique_hitting_validates(n, seed):
    pg = gen_split(n, 0, seed)
    assert validate_hitting(pg.graph, clique_edges_hitting(pg))


def test_cut_complement_examples():
    assert len(cut_complement_hitting(Graph.complete(3))) == 1
    assert cut_complement_hitting(Graph.complete_bipartite(3, 4)) == []
    assert len(cut_complement_hitting(Graph.complete(5))) <= 4


def test_edwards_target_counts_components():
    assert edwards_cut_target(Graph.complete(3)) == 2
    two = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    assert edwards_cut_target(two) == 3 + 1


@given(graphs(max_n=12))
def test_cut_complement_bound(g):
    h = cut_complement_hitting(g)
    assert validate_hitting(g, h)
    c = len(g.components()) if g.n else 0
    assert len(h) <= Fraction(g.m, 2) - Fraction(g.n - c, 4)


def test_local_search_path_above_exact_limit():
    rng = np.random.default_rng(5)
    g = random_graph(rng, 30, 0.3)
    h = cut_complement_hitting(g, seed=1)
    assert validate_hitting(g, h)
    assert len(h) <= Fraction(g.m, 2) - Fraction(g.n - len(g.components()), 4)
    side = local_search_cut(g, edwards_cut_target(g), seed=2)
    assert side is not None and set(np.unique(side)) <= {0, 1}
