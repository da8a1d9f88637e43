from itertools import combinations

import pytest
from hypothesis import given

from conftest import brute_triangles, graphs
from tuza.bounds import nu_complete_formula
from tuza.errors import BudgetExceeded, TooLarge
from tuza.graph import (Graph, PartitionedGraph, triangle_edges, validate_hitting,
                        validate_packing)
from tuza.oracles import exact_max_cut, exact_nu, exact_tau, greedy_hitting, greedy_packing


def brute_nu(g):
    tris = brute_triangles(g)
    for r in range(len(tris), 0, -1):
        for sub in combinations(tris, r):
            es = [e for t in sub for e in triangle_edges(t)]
            if len(es) == len(set(es)):
                return r
    return 0


def brute_tau(g):
    edges = sorted(g.edges)
    for r in range(len(edges) + 1):
        for sub in combinations(edges, r):
            if validate_hitting(g, sub):
                return r


def brute_cut(g):
    return max(sum((mask >> u & 1) != (mask >> v & 1) for u, v in g.edges)
               for mask in range(1 << max(g.n - 1, 0)))


@given(graphs(max_n=6))
def test_nu_matches_brute_force(g):
    value, witness = exact_nu(g)
    assert value == brute_nu(g) == len(witness)
    assert validate_packing(g, witness)


@given(graphs(max_n=6))
def test_tau_matches_brute_force(g):
    value, witness = exact_tau(g)
    assert value == brute_tau(g) == len(witness)
    assert validate_hitting(g, witness)


@given(graphs(max_n=9))
def test_weak_duality_and_witnesses(g):
    nu, p = exact_nu(g)
    tau, h = exact_tau(g)
    assert nu <= tau <= 3 * nu
    assert validate_packing(g, p) and validate_hitting(g, h)
    assert len(greedy_packing(sorted(p))) == nu


@given(graphs(max_n=10))
def test_max_cut_matches_brute_force(g):
    value, (s1, s0) = exact_max_cut(g)
    assert value == brute_cut(g)
    side = set(s1)
    assert sum((u in side) != (v in side) for u, v in g.edges) == value
    assert sorted(s1 + s0) == list(range(g.n))


@pytest.mark.parametrize("n", range(2, 10))
def test_nu_of_cliques(n):
    assert exact_nu(Graph.complete(n))[0] == nu_complete_formula(n)


def test_examples():
    assert exact_nu(Graph.complete(4))[0] == 1
    assert exact_nu(Graph.complete(7))[0] == 7
    assert exact_nu(Graph.complete_bipartite(3, 3)) == (0, [])
    assert exact_tau(Graph.complete(3))[0] == 1
    assert exact_tau(Graph.complete(4))[0] == 2
    assert exact_tau(PartitionedGraph.complete_multipartite([2, 1, 1, 1]).graph)[0] == 3
    assert exact_max_cut(Graph.complete(3))[0] == 2
    assert exact_max_cut(Graph.complete_bipartite(3, 3))[0] == 9
    assert exact_max_cut(Graph.complete(5))[0] == 6


def test_limits():
    with pytest.raises(TooLarge):
        exact_max_cut(Graph(25))
    with pytest.raises(BudgetExceeded):
        exact_nu(Graph.complete(12), max_triangles=10)
    k333 = PartitionedGraph.complete_multipartite([3, 3, 3]).graph
    with pytest.raises(BudgetExceeded):
        exact_tau(k333, budget=1)
    with pytest.raises(BudgetExceeded):
        exact_nu(k333, budget=1)


def test_greedy_hitting_validates():
    g = Graph.complete(6)
    from tuza.graph import enumerate_triangles
    assert validate_hitting(g, greedy_hitting(enumerate_triangles(g)))
