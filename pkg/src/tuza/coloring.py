"""Constructive edge colourings: König (bipartite, Δ colours), Misra–Gries
(Δ+1 colours) and a Δ-colouring for graphs whose maximum-degree vertices
induce a forest.

Colourings are returned as ``list[list[Edge]]``: one sorted edge list per
colour, empty colours dropped, colours numbered in order of first use.
"""
from __future__ import annotations

import logging
import random
from collections import deque
from typing import Iterable

import numpy as np

from . import kernels
from .errors import BudgetExceeded, NotBipartite, PreconditionViolated, TuzaError
from .graph import Edge, Graph, edge

log = logging.getLogger(__name__)

EdgeColoring = list[list[Edge]]

DEFAULT_BUDGET = 10_000_000


class _Palette:
    """Partial proper edge colouring with O(1) lookup of the c-edge at a vertex."""

    def __init__(self, n: int):
        self.at: list[dict[int, int]] = [dict() for _ in range(n)]

    def missing(self, x: int, c: int) -> bool:
        return c not in self.at[x]

    def first_missing(self, x: int, k: int) -> int:
        at = self.at[x]
        for c in range(k):
            if c not in at:
                return c
        raise TuzaError(f"vertex {x} has no free colour among {k}")

    def set(self, u: int, v: int, c: int) -> None:
        assert c not in self.at[u] and c not in self.at[v], (u, v, c)
        self.at[u][c] = v
        self.at[v][c] = u

    def unset(self, u: int, v: int, c: int) -> None:
        del self.at[u][c]
        del self.at[v][c]

    def color_of(self, u: int, v: int) -> int | None:
        for c, w in self.at[u].items():
            if w == v:
                return c
        return None

    def alternating_path(self, start: int, first: int, second: int) -> list[tuple[int, int, int]]:
        """Edges of the maximal path from ``start`` coloured first, second, first, ..."""
        path = []
        x, c = start, first
        while c in self.at[x]:
            y = self.at[x][c]
            path.append((x, y, c))
            x, c = y, (second if c == first else first)
        return path

    def swap(self, path: list[tuple[int, int, int]], a: int, b: int) -> None:
        for x, y, c in path:
            self.unset(x, y, c)
        for x, y, c in path:
            self.set(x, y, b if c == a else a)

    def classes(self) -> EdgeColoring:
        by_color: dict[int, list[Edge]] = {}
        for x, at in enumerate(self.at):
            for c, y in at.items():
                if x < y:
                    by_color.setdefault(c, []).append((x, y))
        return [sorted(by_color[c]) for c in sorted(by_color)]


def konig_color(g: Graph, bipartition: tuple[Iterable[int], Iterable[int]]) -> EdgeColoring:
    """Δ-edge-colouring of a bipartite graph by alternating-path swaps."""
    left, right = set(bipartition[0]), set(bipartition[1])
    for u, v in g.edges:
        if not ((u in left and v in right) or (u in right and v in left)):
            raise NotBipartite(f"edge {(u, v)} does not cross the bipartition")
    k = g.max_degree
    pal = _Palette(g.n)
    for u, v in g.sorted_edges:
        if u not in left:
            u, v = v, u
        common = next((c for c in range(k) if pal.missing(u, c) and pal.missing(v, c)), None)
        if common is None:
            alpha = pal.first_missing(u, k)
            beta = pal.first_missing(v, k)
            # the alpha/beta path from v cannot reach u in a bipartite graph
            pal.swap(pal.alternating_path(v, alpha, beta), alpha, beta)
            common = alpha
        pal.set(u, v, common)
    return pal.classes()


def vizing_color(g: Graph) -> EdgeColoring:
    """(Δ+1)-edge-colouring via Misra–Gries fan rotation."""
    k = g.max_degree + 1
    pal = _Palette(g.n)
    for u, v in g.sorted_edges:
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for c in sorted(pal.at[u]):
                w = pal.at[u][c]
                if w not in in_fan and pal.missing(last, c):
                    nxt = w
                    break
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c = pal.first_missing(u, k)
        d = pal.first_missing(fan[-1], k)
        if c != d:
            pal.swap(pal.alternating_path(u, d, c), c, d)
        pick = None
        for i, w in enumerate(fan):
            if i > 0:
                prev_color = pal.color_of(u, w)
                if prev_color is None or not pal.missing(fan[i - 1], prev_color):
                    break
            if pal.missing(w, d):
                pick = i
                break
        if pick is None:
            raise TuzaError(f"fan rotation failed at edge {(u, v)}")
        shifted = [pal.color_of(u, fan[j + 1]) for j in range(pick)]
        for j in range(pick):
            pal.unset(u, fan[j + 1], shifted[j])
        for j in range(pick):
            pal.set(u, fan[j], shifted[j])
        pal.set(u, fan[pick], d)
    return pal.classes()


def max_degree_vertices_induce_forest(g: Graph) -> bool:
    delta = g.max_degree
    top = {v for v in range(g.n) if g.degree(v) == delta}
    parent = {v: v for v in top}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.sorted_edges:
        if u in top and v in top:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def _kempe_reduce(g: Graph, coloring: EdgeColoring, k: int, seed: int = 0,
                  max_steps: int = 20_000) -> EdgeColoring | None:
    """Try to move every edge of the smallest class into the other ``k`` colours.

    Edges that no single Kempe swap can place trigger a seeded random
    eviction of a neighbouring edge, which is re-queued.
    """
    order = sorted(range(len(coloring)), key=lambda i: (len(coloring[i]), i))
    extra, keep = order[0], sorted(order[1:])
    pal = _Palette(g.n)
    for new_c, old in enumerate(keep):
        for u, v in coloring[old]:
            pal.set(u, v, new_c)
    queue = deque(coloring[extra])
    rng = random.Random(seed)
    steps = 0
    while queue:
        u, v = queue.popleft()
        if _kempe_insert(pal, u, v, k):
            continue
        steps += 1
        if steps > max_steps:
            log.debug("Kempe walk gave up with %d edges uncoloured", len(queue) + 1)
            return None
        # evict: give (u, v) a colour free at one end, uncolour the clash at the other
        if rng.random() < 0.5:
            u, v = v, u
        alpha = rng.choice([c for c in range(k) if pal.missing(u, c)])
        w = pal.at[v][alpha]
        pal.unset(v, w, alpha)
        pal.set(u, v, alpha)
        queue.append(edge(v, w))
    return pal.classes()


def _kempe_insert(pal: _Palette, u: int, v: int, k: int) -> bool:
    miss_u = [c for c in range(k) if pal.missing(u, c)]
    miss_v = [c for c in range(k) if pal.missing(v, c)]
    for c in miss_u:
        if c in miss_v:
            pal.set(u, v, c)
            return True
    for alpha in miss_u:
        for beta in miss_v:
            path = pal.alternating_path(v, alpha, beta)
            if all(u not in (x, y) for x, y, _ in path):
                pal.swap(path, alpha, beta)
                pal.set(u, v, alpha)
                return True
            path = pal.alternating_path(u, beta, alpha)
            if all(v not in (x, y) for x, y, _ in path):
                pal.swap(path, alpha, beta)
                pal.set(u, v, beta)
                return True
    return False


def _search_order(g: Graph) -> list[Edge]:
    # vertices by descending degree; each contributes its not-yet-listed edges
    order, seen = [], set()
    for x in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        for y in sorted(g.adj[x]):
            e = edge(x, y)
            if e not in seen:
                seen.add(e)
                order.append(e)
    return order


def delta_color_class1(g: Graph, budget: int = DEFAULT_BUDGET) -> EdgeColoring:
    """Δ-edge-colouring when the maximum-degree vertices induce a forest.

    Such a colouring always exists; it is found by Misra–Gries, then Kempe
    reduction of the smallest class, then a budgeted backtracking search.
    """
    if g.m == 0:
        return []
    if not max_degree_vertices_induce_forest(g):
        raise PreconditionViolated("maximum-degree vertices induce a cycle")
    k = g.max_degree
    col = vizing_color(g)
    if len(col) <= k:
        return col
    reduced = _kempe_reduce(g, col, k)
    if reduced is not None:
        return reduced
    order = _search_order(g)
    eu = np.array([e[0] for e in order], dtype=np.int64)
    ev = np.array([e[1] for e in order], dtype=np.int64)
    status, colors, nodes = kernels.edge_color_search(eu, ev, g.n, k, budget)
    log.debug("backtracking edge colouring: status=%d nodes=%d", status, nodes)
    if status < 0:
        raise BudgetExceeded(f"no {k}-edge-colouring found within {budget} nodes")
    if status == 0:
        raise TuzaError(f"graph has no {k}-edge-colouring despite the forest condition")
    classes: dict[int, list[Edge]] = {}
    for e, c in zip(order, colors):
        classes.setdefault(int(c), []).append(e)
    return [sorted(classes[c]) for c in sorted(classes)]
