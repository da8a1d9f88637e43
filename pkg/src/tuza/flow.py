"""Integral max flow and bipartite f-factors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from . import kernels
from .errors import GraphFormatError, Infeasible, InvalidK
from .graph import Edge, Graph, edge

DegreeSpec = dict[int, int]

# above this many D-side vertices the subset condition is replaced by flow
SUBSET_LIMIT = 20


@dataclass(frozen=True)
class FlowNetwork:
    n_nodes: int
    arcs: tuple[tuple[int, int, int], ...]
    source: int
    sink: int

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))
        if not (0 <= self.source < self.n_nodes and 0 <= self.sink < self.n_nodes):
            raise GraphFormatError("source and sink must be nodes of the network")
        if self.source == self.sink:
            raise GraphFormatError("source and sink coincide")
        for tail, head, cap in self.arcs:
            if not (0 <= tail < self.n_nodes and 0 <= head < self.n_nodes):
                raise GraphFormatError(f"arc {(tail, head)} leaves the node range")
            if tail == head:
                raise GraphFormatError(f"loop arc at node {tail}")
            if cap < 0:
                raise GraphFormatError(f"arc {(tail, head)} has negative capacity")
            if head == self.source:
                raise GraphFormatError("source has an incoming arc")
            if tail == self.sink:
                raise GraphFormatError("sink has an outgoing arc")


def max_flow(net: FlowNetwork) -> tuple[int, list[int]]:
    """Maximum flow value and the flow on each arc (input order).

    Solved by scipy's Dinic implementation on the summed capacity matrix;
    the net flow on each node pair is then split over that pair's arcs.
    """
    if not net.arcs:
        return 0, []
    tails, heads, caps = (np.array(col, dtype=np.int64) for col in zip(*net.arcs))
    if caps.max() > np.iinfo(np.int32).max:
        raise GraphFormatError("arc capacities must fit in 32 bits")
    cap = csr_matrix((caps.astype(np.int32), (tails, heads)), shape=(net.n_nodes,) * 2)
    result = maximum_flow(cap, net.source, net.sink, method="dinic")
    net_flow = result.flow.todok()
    left: dict[tuple[int, int], int] = {}
    flows = []
    for tail, head, c in net.arcs:
        key = (tail, head)
        if key not in left:
            left[key] = max(int(net_flow.get(key, 0)), 0)
        f = min(left[key], int(c))
        left[key] -= f
        flows.append(f)
    return int(result.flow_value), flows


def _sides(g: Graph, sides) -> tuple[list[int], list[int]]:
    c_side, d_side = sorted(sides[0]), sorted(sides[1])
    cs, ds = set(c_side), set(d_side)
    if cs & ds:
        raise GraphFormatError("sides overlap")
    for u, v in g.edges:
        if (u in cs or u in ds or v in cs or v in ds) and not (
            (u in cs and v in ds) or (u in ds and v in cs)
        ):
            raise GraphFormatError(f"edge {(u, v)} does not cross the sides")
    return c_side, d_side


def _factor_network(g: Graph, c_side, d_side, f) -> tuple[FlowNetwork, list[Edge]]:
    # nodes: source 0, C-side 1..c, D-side c+1..c+d, sink c+d+1
    c_idx = {v: 1 + i for i, v in enumerate(c_side)}
    d_idx = {v: 1 + len(c_side) + i for i, v in enumerate(d_side)}
    sink = 1 + len(c_side) + len(d_side)
    arcs = [(0, c_idx[v], f.get(v, 0)) for v in c_side]
    pairs = []
    for v in c_side:
        for w in sorted(g.adj[v]):
            if w in d_idx:
                arcs.append((c_idx[v], d_idx[w], 1))
                pairs.append(edge(v, w))
    arcs += [(d_idx[w], sink, f.get(w, 0)) for w in d_side]
    return FlowNetwork(sink + 1, arcs, 0, sink), pairs


def flow_feasible(g: Graph, sides, f: Mapping[int, int]) -> bool:
    c_side, d_side = _sides(g, sides)
    if sum(f.get(v, 0) for v in c_side) != sum(f.get(v, 0) for v in d_side):
        return False
    net, _ = _factor_network(g, c_side, d_side, f)
    value, _ = max_flow(net)
    return value == sum(f.get(v, 0) for v in d_side)


def ore_ryser_feasible(g: Graph, sides, f: Mapping[int, int]) -> bool:
    """Whether the bipartite graph on ``sides = (C, D)`` has an f-factor.

    Uses the balance condition f(C) = f(D) plus, for every D' of D,
    f(D') <= sum over y in N(D') of min(f(y), |N(y) & D'|).  The subsets are
    enumerated directly up to ``SUBSET_LIMIT`` D-vertices; beyond that the
    equivalent flow test is used.
    """
    c_side, d_side = _sides(g, sides)
    if any(f.get(v, 0) < 0 for v in c_side + d_side):
        return False
    if sum(f.get(v, 0) for v in c_side) != sum(f.get(v, 0) for v in d_side):
        return False
    if len(d_side) > SUBSET_LIMIT:
        return flow_feasible(g, (c_side, d_side), f)
    f_c = np.array([f.get(v, 0) for v in c_side], dtype=np.int64)
    f_d = np.array([f.get(v, 0) for v in d_side], dtype=np.int64)
    adj = np.zeros((len(c_side), len(d_side)), dtype=np.uint8)
    d_pos = {v: j for j, v in enumerate(d_side)}
    for i, v in enumerate(c_side):
        for w in g.adj[v]:
            if w in d_pos:
                adj[i, d_pos[w]] = 1
    return not kernels.ore_ryser_violated(f_c, f_d, adj)


def f_factor(g: Graph, sides, f: Mapping[int, int]) -> Graph:
    """Spanning subgraph H of the bipartite graph with d_H(v) = f(v) on C and D."""
    c_side, d_side = _sides(g, sides)
    need = sum(f.get(v, 0) for v in d_side)
    if sum(f.get(v, 0) for v in c_side) != need:
        raise Infeasible("f(C) != f(D)")
    net, pairs = _factor_network(g, c_side, d_side, f)
    value, flows = max_flow(net)
    if value != need:
        raise Infeasible(f"maximum flow {value} falls short of f(D) = {need}")
    offset = len(c_side)
    chosen = [pairs[i - offset] for i in range(offset, offset + len(pairs)) if flows[i]]
    return Graph(g.n, chosen)


def balanced_factor(c_size: int, d_size: int, k: int,
                    c_vertices: Sequence[int] | None = None,
                    d_vertices: Sequence[int] | None = None) -> DegreeSpec:
    """Degree k on every D vertex; C degrees differ by at most one and balance the sum.

    The first ``(k * d_size) % c_size`` C vertices get the ceiling of
    ``k * d_size / c_size``, the rest the floor.  Vertex ids default to
    ``0..c_size-1`` for C and ``c_size..c_size+d_size-1`` for D.
    """
    if k < 0 or k > c_size:
        raise InvalidK(f"k={k} must lie in [0, {c_size}]")
    cv = list(range(c_size)) if c_vertices is None else list(c_vertices)
    dv = list(range(c_size, c_size + d_size)) if d_vertices is None else list(d_vertices)
    if len(cv) != c_size or len(dv) != d_size:
        raise GraphFormatError("vertex lists do not match the side sizes")
    spec = {v: k for v in dv}
    if c_size:
        low, r = divmod(k * d_size, c_size)
        for i, v in enumerate(cv):
            spec[v] = low + 1 if i < r else low
    return spec


def degrees_in(h: Graph, vertices: Iterable[int]) -> dict[int, int]:
    return {v: h.degree(v) for v in vertices}
