"""Simple undirected graphs, vertex partitions, triangles and certificate checks.

Vertices are dense integers ``0..n-1``.  Edges are stored as ``(u, v)`` with
``u < v``; triangles as sorted triples.  A packing is any iterable of
triangles, a hitting set any iterable of edges and an edge colouring a
sequence of edge sequences (one per colour class).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import GraphFormatError, NotSplit

Edge = tuple[int, int]
Triangle = tuple[int, int, int]

CLIQUE = "clique"
INDEPENDENT = "independent"


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def triangle(u: int, v: int, w: int) -> Triangle:
    a, b, c = sorted((u, v, w))
    return (a, b, c)


def triangle_edges(t: Sequence[int]) -> tuple[Edge, Edge, Edge]:
    a, b, c = sorted(t)
    return (a, b), (a, c), (b, c)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if int(n) != n or n < 0:
            raise GraphFormatError(f"vertex count must be a non-negative integer, got {n!r}")
        n = int(n)
        seen = set()
        for e in edges:
            if len(e) != 2:
                raise GraphFormatError(f"edge {e!r} does not have two endpoints")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge {e!r} has an endpoint outside [0, {n})")
            seen.add(edge(u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(seen))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        if self.edges:
            e = np.array(self.sorted_edges, dtype=np.int64)
            a[e[:, 0], e[:, 1]] = 1
            a[e[:, 1], e[:, 0]] = 1
        a.setflags(write=False)
        return a

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """G[X], keeping the global vertex ids (other vertices become isolated)."""
        keep = set(vertices)
        return Graph(self.n, [e for e in self.edges if e[0] in keep and e[1] in keep])

    def without(self, edges: Iterable[Sequence[int]]) -> "Graph":
        drop = {edge(*e) for e in edges}
        return Graph(self.n, self.edges - drop)

    def union(self, other: "Graph") -> "Graph":
        return Graph(max(self.n, other.n), self.edges | other.edges)

    def edges_between(self, xs: Iterable[int], ys: Iterable[int]) -> list[Edge]:
        ys = set(ys)
        return sorted({edge(x, y) for x in xs for y in self.adj[x] if y in ys})

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def complete_bipartite(cls, p: int, q: int) -> "Graph":
        return cls(p + q, [(i, p + j) for i in range(p) for j in range(q)])


@dataclass(frozen=True)
class VertexClass:
    role: str
    vertices: frozenset[int]

    def __post_init__(self):
        if self.role not in (CLIQUE, INDEPENDENT):
            raise GraphFormatError(f"unknown class role {self.role!r}")
        object.__setattr__(self, "vertices", frozenset(int(v) for v in self.vertices))


class PartitionedGraph:
    """A graph together with labelled clique / independent vertex classes.

    An empty class list means "no partition attached"; otherwise the classes
    must partition the vertex set and each must induce a clique or an
    independent set as labelled.
    """

    def __init__(self, graph: Graph, classes: Iterable[VertexClass | tuple[str, Iterable[int]]] = ()):
        cls_list = []
        for c in classes:
            if not isinstance(c, VertexClass):
                role, verts = c
                c = VertexClass(role, frozenset(verts))
            cls_list.append(c)
        self.graph = graph
        self.classes: tuple[VertexClass, ...] = tuple(cls_list)
        class_of = [-1] * graph.n
        for i, c in enumerate(self.classes):
            for v in c.vertices:
                if not 0 <= v < graph.n:
                    raise GraphFormatError(f"class {i} mentions vertex {v} outside the graph")
                if class_of[v] != -1:
                    raise GraphFormatError(f"vertex {v} is in classes {class_of[v]} and {i}")
                class_of[v] = i
        if self.classes and -1 in class_of:
            raise GraphFormatError(f"vertex {class_of.index(-1)} belongs to no class")
        self.class_of: tuple[int, ...] = tuple(class_of)
        for i, c in enumerate(self.classes):
            for u, v in combinations(sorted(c.vertices), 2):
                present = graph.has_edge(u, v)
                if c.role == CLIQUE and not present:
                    raise GraphFormatError(f"clique class {i} misses edge {(u, v)}")
                if c.role == INDEPENDENT and present:
                    raise GraphFormatError(f"independent class {i} contains edge {(u, v)}")

    def __repr__(self):
        sizes = ",".join(f"{c.role[0]}{len(c.vertices)}" for c in self.classes)
        return f"PartitionedGraph(n={self.graph.n}, m={self.graph.m}, classes=[{sizes}])"

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def complete(self) -> bool:
        """True iff every pair of vertices in different classes is adjacent."""
        if not self.classes:
            return False
        g = self.graph
        for i, j in combinations(range(len(self.classes)), 2):
            for u in self.classes[i].vertices:
                if not self.classes[j].vertices <= g.adj[u]:
                    return False
        return True

    def vertices(self, i: int) -> list[int]:
        return sorted(self.classes[i].vertices)

    @property
    def is_split(self) -> bool:
        roles = sorted(c.role for c in self.classes)
        return roles == [CLIQUE, INDEPENDENT]

    def split_parts(self) -> tuple[list[int], list[int]]:
        """``(K, S)`` of a split graph."""
        if not self.is_split:
            raise NotSplit("graph is not partitioned as one clique class plus one independent class")
        k = next(c for c in self.classes if c.role == CLIQUE)
        s = next(c for c in self.classes if c.role == INDEPENDENT)
        return sorted(k.vertices), sorted(s.vertices)

    # ---------------------------------------------------------- builders

    @classmethod
    def complete_split(cls, k_size: int, s_size: int) -> "PartitionedGraph":
        """Clique on ``0..k-1``, independent set on ``k..k+s-1``, all cross edges."""
        n = k_size + s_size
        edges = list(combinations(range(k_size), 2))
        edges += [(i, k_size + j) for i in range(k_size) for j in range(s_size)]
        return cls(Graph(n, edges), [(CLIQUE, range(k_size)), (INDEPENDENT, range(k_size, n))])

    @classmethod
    def complete_multipartite(cls, sizes: Sequence[int]) -> "PartitionedGraph":
        """Independent classes in consecutive id blocks, all cross edges present."""
        blocks, start = [], 0
        for s in sizes:
            if s < 0:
                raise GraphFormatError(f"negative part size {s}")
            blocks.append(range(start, start + s))
            start += s
        edges = [(u, v) for i, j in combinations(range(len(blocks)), 2)
                 for u in blocks[i] for v in blocks[j]]
        return cls(Graph(start, edges), [(INDEPENDENT, b) for b in blocks])


# ------------------------------------------------------------------ triangles


def enumerate_triangles(g: Graph) -> list[Triangle]:
    """All triangles of ``g``, each once, as sorted triples in lexicographic order."""
    if g.n < 3 or g.m < 3:
        return []
    rows = kernels.triangles(g.adjacency_matrix)
    return [(int(a), int(b), int(c)) for a, b, c in rows]


# ----------------------------------------------------------------- validators


def validate_packing(g: Graph, packing: Iterable[Sequence[int]]) -> bool:
    seen: set[Edge] = set()
    for t in packing:
        if len(t) != 3 or len(set(t)) != 3:
            return False
        for e in triangle_edges(t):
            if e not in g.edges or e in seen:
                return False
            seen.add(e)
    return True


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u, v in g.edges:
        if adj[u] & adj[v]:
            return False
    return True


def validate_hitting(g: Graph, hitting: Iterable[Sequence[int]]) -> bool:
    hs = {edge(*e) for e in hitting}
    if not hs <= g.edges:
        return False
    return is_triangle_free(g.without(hs))


def validate_coloring(g: Graph, coloring: Sequence[Iterable[Sequence[int]]]) -> bool:
    covered: set[Edge] = set()
    for cls in coloring:
        touched: set[int] = set()
        for e in cls:
            u, v = edge(*e)
            if (u, v) in covered or u in touched or v in touched:
                return False
            covered.add((u, v))
            touched.update((u, v))
    return covered == g.edges


def is_matching(edges: Iterable[Sequence[int]]) -> bool:
    touched: set[int] = set()
    for u, v in edges:
        if u in touched or v in touched:
            return False
        touched.update((u, v))
    return True
