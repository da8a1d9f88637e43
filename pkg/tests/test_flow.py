import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bipartite_graphs
from tuza.errors import GraphFormatError, Infeasible, InvalidK
from tuza.flow import (FlowNetwork, balanced_factor, degrees_in, f_factor, flow_feasible,
                       max_flow, ore_ryser_feasible)
from tuza.graph import Graph


def test_max_flow_textbook():
    # classic six-node example with max flow 23
    arcs = [(0, 1, 16), (0, 2, 13), (1, 2, 10), (2, 1, 4), (1, 3, 12), (3, 2, 9),
            (2, 4, 14), (4, 3, 7), (3, 5, 20), (4, 5, 4)]
    value, flows = max_flow(FlowNetwork(6, arcs, 0, 5))
    assert value == 23
    assert all(0 <= f <= c for f, (_, _, c) in zip(flows, arcs))


def test_flow_network_validation():
    with pytest.raises(GraphFormatError):
        FlowNetwork(2, [(0, 1, -1)], 0, 1)
    with pytest.raises(GraphFormatError):
        FlowNetwork(2, [(0, 2, 1)], 0, 1)


def test_f_factor_perfect_matching():
    g = Graph.complete_bipartite(3, 3)
    f = {v: 1 for v in range(6)}
    h = f_factor(g, ([0, 1, 2], [3, 4, 5]), f)
    assert degrees_in(h, range(6)) == f
    assert h.edges <= g.edges


def test_f_factor_infeasible():
    g = Graph(4, [(0, 2), (1, 2)])
    f = {0: 1, 1: 1, 2: 1, 3: 1}
    assert not ore_ryser_feasible(g, ([0, 1], [2, 3]), f)
    assert not flow_feasible(g, ([0, 1], [2, 3]), f)
    with pytest.raises(Infeasible):
        f_factor(g, ([0, 1], [2, 3]), f)


def test_unbalanced_sums():
    g = Graph.complete_bipartite(2, 2)
    f = {0: 2, 1: 2, 2: 1, 3: 1}
    assert not ore_ryser_feasible(g, ([0, 1], [2, 3]), f)
    with pytest.raises(Infeasible):
        f_factor(g, ([0, 1], [2, 3]), f)


def test_sides_must_separate_edges():
    with pytest.raises(GraphFormatError):
        ore_ryser_feasible(Graph(3, [(0, 1)]), ([0, 1], [2]), {})


@given(bipartite_graphs(max_side=6), st.data())
def test_ore_ryser_agrees_with_flow(case, data):
    g, sides = case
    f = {v: data.draw(st.integers(0, max(g.degree(v), 0))) for v in range(g.n)}
    feasible = flow_feasible(g, sides, f)
    assert ore_ryser_feasible(g, sides, f) == feasible
    if feasible:
        h = f_factor(g, sides, f)
        assert all(h.degree(v) == f[v] for v in range(g.n))


def test_subsets_beyond_limit_use_flow():
    c, d = 4, 22
    g = Graph.complete_bipartite(c, d)
    f = balanced_factor(c, d, 2)
    assert ore_ryser_feasible(g, (range(c), range(c, c + d)), f)


@pytest.mark.parametrize("c, d, k", [(3, 2, 2), (4, 3, 1), (5, 5, 3), (3, 0, 2), (2, 7, 2)])
def test_balanced_factor(c, d, k):
    spec = balanced_factor(c, d, k)
    c_degs = [spec[v] for v in range(c)]
    assert all(spec[v] == k for v in range(c, c + d))
    assert sum(c_degs) == k * d
    if c:
        assert max(c_degs) - min(c_degs) <= 1
        assert c_degs == sorted(c_degs, reverse=True)
        g = Graph.complete_bipartite(c, d)
        assert ore_ryser_feasible(g, (range(c), range(c, c + d)), spec)


def test_balanced_factor_rejects_k():
    with pytest.raises(InvalidK):
        balanced_factor(3, 2, 4)
    with pytest.raises(InvalidK):
        balanced_factor(3, 2, -1)


def test_zero_factor():
    g = Graph.complete_bipartite(2, 2)
    assert f_factor(g, ([0, 1], [2, 3]), {}).m == 0
    assert np.all(np.array(list(degrees_in(Graph(2), [0, 1]).values())) == 0)
