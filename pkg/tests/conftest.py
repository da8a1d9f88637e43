from __future__ import annotations

from itertools import combinations

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tuza.graph import Graph

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw: st.DrawFn, max_n: int = 9, min_n: int = 0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def bipartite_graphs(draw: st.DrawFn, max_side: int = 6):
    p = draw(st.integers(0, max_side))
    q = draw(st.integers(0, max_side))
    pairs = [(u, p + v) for u in range(p) for v in range(q)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(p + q, [e for e, keep in zip(pairs, mask) if keep])
    return g, (list(range(p)), list(range(p, p + q)))


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_bipartite(rng: np.random.Generator, p_size: int, q_size: int, prob: float):
    edges = [(u, p_size + v) for u in range(p_size) for v in range(q_size) if rng.random() < prob]
    return Graph(p_size + q_size, edges), (list(range(p_size)), list(range(p_size, p_size + q_size)))


def brute_triangles(g: Graph):
    return [t for t in combinations(range(g.n), 3)
            if all(g.has_edge(a, b) for a, b in combinations(t, 2))]
