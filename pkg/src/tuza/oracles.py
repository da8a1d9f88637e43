"""Exact ν, τ and max-cut by exhaustive search (desk-scale ground truth)."""
from __future__ import annotations

import logging
from collections import Counter

import numpy as np

from . import kernels
from .errors import BudgetExceeded, TooLarge
from .graph import Edge, Graph, Triangle, enumerate_triangles, triangle_edges

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10_000_000
MAX_TRIANGLES = 2000
MAX_CUT_LIMIT = 24


class _TriangleIndex:
    """Triangles of a graph with their edges renumbered densely."""

    def __init__(self, g: Graph, max_triangles: int):
        self.triangles: list[Triangle] = enumerate_triangles(g)
        if len(self.triangles) > max_triangles:
            raise BudgetExceeded(
                f"{len(self.triangles)} triangles exceed the limit of {max_triangles}")
        edges = sorted({e for t in self.triangles for e in triangle_edges(t)})
        self.edges: list[Edge] = edges
        index = {e: i for i, e in enumerate(edges)}
        self.tri_e = np.array([[index[e] for e in triangle_edges(t)] for t in self.triangles],
                              dtype=np.int64).reshape(-1, 3)
        counts = np.bincount(self.tri_e.ravel(), minlength=len(edges))
        self.e_ptr = np.zeros(len(edges) + 1, dtype=np.int64)
        np.cumsum(counts, out=self.e_ptr[1:])
        fill = self.e_ptr[:-1].copy()
        self.e_tri = np.empty(int(self.e_ptr[-1]), dtype=np.int64)
        for t, row in enumerate(self.tri_e):
            for e in row:
                self.e_tri[fill[e]] = t
                fill[e] += 1
        self.eu = np.array([e[0] for e in edges], dtype=np.int64)
        self.ev = np.array([e[1] for e in edges], dtype=np.int64)
        self.n = g.n


def greedy_packing(triangles: list[Triangle]) -> list[Triangle]:
    used: set[Edge] = set()
    out = []
    for t in triangles:
        es = triangle_edges(t)
        if not any(e in used for e in es):
            used.update(es)
            out.append(t)
    return out


def _packing_upper_bound(triangles: list[Triangle]) -> int:
    # a packed triangle uses two triangle-edges at each of its vertices
    deg = Counter()
    for e in {e for t in triangles for e in triangle_edges(t)}:
        deg[e[0]] += 1
        deg[e[1]] += 1
    return sum(d // 2 for d in deg.values()) // 3


def exact_nu(g: Graph, budget: int = DEFAULT_BUDGET,
             max_triangles: int = MAX_TRIANGLES) -> tuple[int, list[Triangle]]:
    """Maximum triangle packing size and a witness."""
    idx = _TriangleIndex(g, max_triangles)
    if not idx.triangles:
        return 0, []
    best = greedy_packing(idx.triangles)
    root_ub = _packing_upper_bound(idx.triangles)
    if len(best) >= root_ub:
        return len(best), best
    size, chosen, nodes, status = kernels.max_packing_search(
        idx.tri_e, idx.e_ptr, idx.e_tri, idx.eu, idx.ev, g.n, len(best), root_ub, budget)
    log.debug("exact_nu: %d triangles, %d nodes, status %d", len(idx.triangles), nodes, status)
    if status == 1:
        raise BudgetExceeded(f"packing search exceeded {budget} nodes")
    if size > len(best):
        best = sorted(idx.triangles[int(t)] for t in chosen[:size])
    return len(best), best


def greedy_hitting(triangles: list[Triangle]) -> list[Edge]:
    """Repeatedly take the edge lying in the most unhit triangles."""
    remaining = list(triangles)
    chosen: list[Edge] = []
    while remaining:
        load = Counter(e for t in remaining for e in triangle_edges(t))
        e = min(load, key=lambda x: (-load[x], x))
        chosen.append(e)
        remaining = [t for t in remaining if e not in triangle_edges(t)]
    return sorted(chosen)


def cut_complement(g: Graph, mask: int) -> list[Edge]:
    return sorted((u, v) for u, v in g.edges if ((mask >> u) & 1) == ((mask >> v) & 1))


def exact_tau(g: Graph, budget: int = DEFAULT_BUDGET,
              max_triangles: int = MAX_TRIANGLES) -> tuple[int, list[Edge]]:
    """Minimum triangle hitting set size and a witness."""
    idx = _TriangleIndex(g, max_triangles)
    if not idx.triangles:
        return 0, []
    core = Graph(g.n, idx.edges)
    best = greedy_hitting(idx.triangles)
    if g.n <= MAX_CUT_LIMIT:
        _, mask = kernels.max_cut(g.n, idx.eu, idx.ev)
        alt = cut_complement(core, mask)
        if len(alt) < len(best):
            best = alt
    active = len({v for e in idx.edges for v in e})
    root_lb = max(len(greedy_packing(idx.triangles)), len(idx.edges) - active * active // 4)
    if len(best) <= root_lb:
        return len(best), best
    size, mask, nodes, status = kernels.min_hitting_search(
        idx.tri_e, idx.e_ptr, idx.e_tri, len(idx.edges), len(best), root_lb, budget)
    log.debug("exact_tau: %d triangles, %d nodes, status %d", len(idx.triangles), nodes, status)
    if status == 1:
        raise BudgetExceeded(f"hitting search exceeded {budget} nodes")
    if size < len(best):
        best = [idx.edges[i] for i in range(len(idx.edges)) if mask[i]]
    return len(best), best


def exact_max_cut(g: Graph) -> tuple[int, tuple[list[int], list[int]]]:
    """Maximum edge cut and a witnessing bipartition (vertex n-1 on the second side)."""
    if g.n > MAX_CUT_LIMIT:
        raise TooLarge(f"exact max cut is limited to {MAX_CUT_LIMIT} vertices, got {g.n}")
    eu = np.array([e[0] for e in g.sorted_edges], dtype=np.int64)
    ev = np.array([e[1] for e in g.sorted_edges], dtype=np.int64)
    value, mask = kernels.max_cut(g.n, eu, ev)
    side1 = [v for v in range(g.n) if (mask >> v) & 1]
    side0 = [v for v in range(g.n) if not (mask >> v) & 1]
    return value, (side1, side0)
