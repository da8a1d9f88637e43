"""Constructive triangle hitting sets."""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import kernels
from .errors import BoundNotMet
from .graph import Edge, Graph, PartitionedGraph

log = logging.getLogger(__name__)

EXACT_CUT_LIMIT = 24


def clique_edges_hitting(pg: PartitionedGraph) -> list[Edge]:
    """All edges inside the clique class of a split graph."""
    k_part, _ = pg.split_parts()
    return sorted(combinations(k_part, 2))


def edwards_cut_target(g: Graph) -> Fraction:
    """m/2 + (n − c)/4, with c the number of components.

    For connected graphs this is m/2 + (n − 1)/4; every graph has a cut at
    least this large.
    """
    c = len(g.components()) if g.n else 0
    return Fraction(g.m, 2) + Fraction(g.n - c, 4)


def _cut_value(g: Graph, side: np.ndarray) -> int:
    return sum(1 for u, v in g.edges if side[u] != side[v])


def local_search_cut(g: Graph, target: Fraction, seed: int = 0,
                     restarts: int = 200) -> np.ndarray | None:
    """1-flip local search from random starts until the cut reaches ``target``."""
    rng = np.random.default_rng(seed)
    adj = [sorted(s) for s in g.adj]
    best = None
    for _ in range(restarts):
        side = rng.integers(0, 2, size=g.n, dtype=np.int8)
        improved = True
        while improved:
            improved = False
            for v in range(g.n):
                same = sum(1 for w in adj[v] if side[w] == side[v])
                if 2 * same > len(adj[v]):
                    side[v] ^= 1
                    improved = True
        value = _cut_value(g, side)
        if best is None or value > best[0]:
            best = (value, side.copy())
        if value >= target:
            return side
    log.debug("local search best cut %s below target %s", best and best[0], target)
    return None


def cut_complement_hitting(g: Graph, seed: int = 0, restarts: int = 200) -> list[Edge]:
    """Edges not crossing a large cut; no triangle can have all three edges crossing.

    The cut reaches m/2 + (n − c)/4, so the result has at most
    m/2 − (n − c)/4 edges (c = number of components).
    """
    target = edwards_cut_target(g)
    if g.n <= EXACT_CUT_LIMIT:
        eu = np.array([e[0] for e in g.sorted_edges], dtype=np.int64)
        ev = np.array([e[1] for e in g.sorted_edges], dtype=np.int64)
        value, mask = kernels.max_cut(g.n, eu, ev)
        side = np.array([(mask >> v) & 1 for v in range(g.n)], dtype=np.int8)
    else:
        side = local_search_cut(g, target, seed=seed, restarts=restarts)
        if side is None:
            raise BoundNotMet(f"no cut of size {target} found in {restarts} restarts")
        value = _cut_value(g, side)
    if value < target:
        raise BoundNotMet(f"maximum cut {value} is below the guaranteed {target}")
    return sorted((u, v) for u, v in g.edges if side[u] == side[v])
