"""Packing constructions and closed-form bounds on ν and τ.

All bound values are exact :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .coloring import EdgeColoring, vizing_color
from .errors import DensityTooLow, DomainError, GraphFormatError, MissingCrossEdge
from .graph import Edge, Graph, PartitionedGraph, Triangle, enumerate_triangles, triangle


def extend_packing(g: Graph, x_set: Iterable[int], y_set: Iterable[int],
                   coloring: Sequence[Iterable[Edge]]) -> list[Triangle]:
    """Turn colour classes of G[X] into triangles with apexes in Y.

    The ``min(|Y|, k)`` largest classes (ties by class index) are paired with
    the Y vertices in increasing order; each matching edge ``uw`` of the
    class paired with ``y`` becomes the triangle ``y u w``.
    """
    xs, ys = sorted(set(x_set)), sorted(set(y_set))
    if set(xs) & set(ys):
        raise GraphFormatError("X and Y overlap")
    for x in xs:
        missing = [y for y in ys if y not in g.adj[x]]
        if missing:
            raise MissingCrossEdge(f"edge {(x, missing[0])} between X and Y is absent")
    inside = set(xs)
    classes = [list(c) for c in coloring]
    for c in classes:
        for u, w in c:
            if u not in inside or w not in inside or not g.has_edge(u, w):
                raise GraphFormatError(f"coloured edge {(u, w)} is not an edge of G[X]")
    order = sorted(range(len(classes)), key=lambda i: (-len(classes[i]), i))
    packing = []
    for y, i in zip(ys, order):
        packing.extend(triangle(y, u, w) for u, w in classes[i])
    return sorted(packing)


def extend_packing_bound(m_x: int, y_size: int, k: int) -> Fraction:
    """``min(1, |Y|/k) * |E(G[X])|`` for a k-class colouring."""
    if k == 0:
        return Fraction(0)
    return min(Fraction(1), Fraction(y_size, k)) * m_x


def complete_split_packing(k_size: int, s_size: int) -> list[Triangle]:
    """Packing of the complete split graph from :meth:`PartitionedGraph.complete_split`."""
    if k_size < 0 or s_size < 0:
        raise DomainError("part sizes must be non-negative")
    pg = PartitionedGraph.complete_split(k_size, s_size)
    k_vertices = range(k_size)
    clique = pg.graph.induced(k_vertices)
    return extend_packing(pg.graph, k_vertices, range(k_size, k_size + s_size),
                          vizing_color(clique))


def complete_split_bound(k_size: int, s_size: int) -> Fraction:
    return Fraction(k_size - 1, 2) * min(s_size, k_size) if k_size else Fraction(0)


def nu_complete_formula(n: int) -> int:
    """Maximum number of edge-disjoint triangles in K_n."""
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    r = n % 6
    if r in (1, 3):
        k = 0
    elif r == 5:
        k = 4
    elif r in (0, 2):
        k = n // 2
    else:
        k = n // 2 + 1
    value, rem = divmod(comb(n, 2) - k, 3)
    assert rem == 0
    return value


def lower_bound_general(g: Graph) -> Fraction:
    """|T(G)| ν(K_n) / C(n, 3)."""
    if g.n < 3:
        return Fraction(0)
    return Fraction(len(enumerate_triangles(g)) * nu_complete_formula(g.n), comb(g.n, 3))


def crossing_triangles(pg: PartitionedGraph) -> list[Triangle]:
    """Triangles of a split graph with at least one vertex in each of K and S."""
    k_part, s_part = pg.split_parts()
    ks, ss = set(k_part), set(s_part)
    return [t for t in enumerate_triangles(pg.graph)
            if any(v in ks for v in t) and any(v in ss for v in t)]


def lower_bound_split(pg: PartitionedGraph) -> Fraction:
    """|T'| / max(|S|, |K|) for a split graph."""
    k_part, s_part = pg.split_parts()
    denom = max(len(k_part), len(s_part))
    if denom == 0:
        return Fraction(0)
    return Fraction(len(crossing_triangles(pg)), denom)


def tripartite_bound_factor(n: int, m: int) -> Fraction:
    """n² / (3(4m − n²)), the τ/ν factor for tripartite graphs with m > n²/4."""
    if 4 * m <= n * n:
        raise DensityTooLow(f"need m > n^2/4, got n={n}, m={m}")
    return Fraction(n * n, 3 * (4 * m - n * n))


def bollobas_triangle_bound(n: int, m: int) -> Fraction:
    """Lower bound n(4m − n²)/9 on the triangle count."""
    return Fraction(n * (4 * m - n * n), 9)


def cut_upper_bound_tau(n: int, m: int) -> Fraction:
    """m/2 − (n − 1)/4."""
    return Fraction(m, 2) - Fraction(n - 1, 4)


def all_bounds(pg: PartitionedGraph) -> dict[str, Fraction]:
    """Every bound that applies to the graph, keyed by name."""
    g = pg.graph
    out: dict[str, Fraction] = {
        "triangles": Fraction(len(enumerate_triangles(g))),
        "nu_lower_general": lower_bound_general(g),
        "tau_upper_cut": cut_upper_bound_tau(g.n, g.m),
        "bollobas_triangles": bollobas_triangle_bound(g.n, g.m),
    }
    if g.n >= 2 and g.m == comb(g.n, 2):
        out["nu_complete"] = Fraction(nu_complete_formula(g.n))
    if pg.is_split:
        out["nu_lower_split"] = lower_bound_split(pg)
        k_part, _ = pg.split_parts()
        out["tau_upper_clique"] = Fraction(comb(len(k_part), 2))
    if len(pg.classes) == 3 and all(c.role == "independent" for c in pg.classes):
        sizes = sorted(len(c.vertices) for c in pg.classes)
        out["tau_upper_two_smallest"] = Fraction(sizes[0] * sizes[1])
        if 4 * g.m > g.n * g.n:
            out["tripartite_factor"] = tripartite_bound_factor(g.n, g.m)
    return out
