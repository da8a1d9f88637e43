"""Packing / hitting certificates for complete 4-partite graphs.

Part sizes are ``a >= b >= c >= d``; vertex ids are assigned in blocks
A (``0..a-1``), then B, C and D.  Every construction returns an explicit
triangle packing or hitting set of :func:`build_complete_4partite`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bounds import extend_packing
from .coloring import DEFAULT_BUDGET, delta_color_class1, konig_color, vizing_color
from .errors import CaseMismatch, GraphFormatError, SpecTooSmall, TuzaError
from .flow import balanced_factor, f_factor, ore_ryser_feasible
from .graph import Edge, Graph, PartitionedGraph, Triangle, validate_hitting, validate_packing

THREE_HALVES = Fraction(3, 2)


@dataclass(frozen=True)
class FourPartiteSpec:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        parts = (self.a, self.b, self.c, self.d)
        if any(not isinstance(p, int) or p < 0 for p in parts):
            raise GraphFormatError(f"part sizes must be non-negative integers, got {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise GraphFormatError(f"part sizes must be sorted descending, got {parts}")

    @classmethod
    def of(cls, parts: Sequence[int]) -> "FourPartiteSpec":
        """Spec from any four sizes (sorted for you)."""
        if len(parts) != 4:
            raise GraphFormatError(f"expected four part sizes, got {len(parts)}")
        a, b, c, d = sorted((int(p) for p in parts), reverse=True)
        return cls(a, b, c, d)

    @property
    def parts(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.d

    @property
    def m(self) -> int:
        a, b, c, d = self.parts
        return a * b + a * c + a * d + b * c + b * d + c * d

    @property
    def blocks(self) -> tuple[list[int], list[int], list[int], list[int]]:
        out, start = [], 0
        for size in self.parts:
            out.append(list(range(start, start + size)))
            start += size
        return tuple(out)

    def __str__(self):
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class TuzaCertificate:
    """A packing P and hitting set H; together they prove τ/ν <= |H|/|P|."""

    packing: tuple[Triangle, ...]
    hitting: tuple[Edge, ...]
    ratio: Fraction | float
    case_tag: str

    def validate(self, g: Graph) -> bool:
        return validate_packing(g, self.packing) and validate_hitting(g, self.hitting)


def certificate_ratio(hitting_size: int, packing_size: int) -> Fraction | float:
    if hitting_size == 0:
        return Fraction(0)
    if packing_size == 0:
        return math.inf
    return Fraction(hitting_size, packing_size)


def build_complete_4partite(spec: FourPartiteSpec) -> PartitionedGraph:
    return PartitionedGraph.complete_multipartite(spec.parts)


# --------------------------------------------------------------- hitting sets


def hitting_case1(spec: FourPartiteSpec) -> list[Edge]:
    """All edges among B, C and D (a triangle has at most one vertex in A)."""
    a, b, c, d = spec.parts
    if a < b + c + 1:
        raise CaseMismatch(f"needs a >= b + c + 1, got {spec}")
    _, bs, cs, ds = spec.blocks
    return sorted([(x, y) for x in bs for y in cs + ds] + [(x, y) for x in cs for y in ds])


def hitting_ad_bc(spec: FourPartiteSpec) -> list[Edge]:
    """All A–D edges plus all B–C edges."""
    as_, bs, cs, ds = spec.blocks
    return sorted([(x, y) for x in as_ for y in ds] + [(x, y) for x in bs for y in cs])


# ------------------------------------------------------------------- packings


def _graph(spec: FourPartiteSpec) -> Graph:
    return build_complete_4partite(spec).graph


def claim1_bound(spec: FourPartiteSpec) -> Fraction:
    a, b, c, d = spec.parts
    e = b * c + b * d + c * d
    return min(Fraction(e), Fraction(a * e, b + c + 1))


def packing_claim1(spec: FourPartiteSpec) -> list[Triangle]:
    """Misra–Gries colouring of G[B ∪ C ∪ D] extended into A."""
    g = _graph(spec)
    as_, bs, cs, ds = spec.blocks
    x = bs + cs + ds
    return extend_packing(g, x, as_, vizing_color(g.induced(x)))


def claim2_split(spec: FourPartiteSpec) -> dict[str, list[int]]:
    """The vertex groups C', C'', D', D'' used by :func:`packing_claim2`."""
    a, b, c, d = spec.parts
    if a > c + d:
        raise CaseMismatch(f"needs a <= c + d, got {spec}")
    x = (c + d - a) // 2
    _, _, cs, ds = spec.blocks
    return {"C'": cs[:x], "C''": cs[x:], "D'": ds[:a - c + x], "D''": ds[a - c + x:]}


def claim2_bound(spec: FourPartiteSpec) -> int:
    """ab + x(c + d − a − x) with x = ⌊(c + d − a)/2⌋."""
    a, b, c, d = spec.parts
    s = c + d - a
    return a * b + (s // 2) * (s - s // 2)


def packing_claim2(spec: FourPartiteSpec) -> list[Triangle]:
    """König-coloured A–B edges with apexes C'' ∪ D', plus C'–(A ∪ B) edges with apexes D''."""
    groups = claim2_split(spec)
    g = _graph(spec)
    as_, bs, _, _ = spec.blocks
    ab = as_ + bs
    first = extend_packing(g, ab, groups["C''"] + groups["D'"],
                           konig_color(g.induced(ab), (as_, bs)))
    reduced = g.without((u, v) for u in as_ for v in bs)
    x_set = groups["C'"] + ab
    second = extend_packing(reduced, x_set, groups["D''"],
                            konig_color(reduced.induced(x_set), (groups["C'"], ab)))
    return sorted(first + second)


def claim3_bound(spec: FourPartiteSpec) -> Fraction:
    a, b, c, d = spec.parts
    e = b * c + b * d + c * d
    return min(Fraction(e), Fraction(a * e, b + c))


def packing_claim3(spec: FourPartiteSpec, budget: int = DEFAULT_BUDGET) -> list[Triangle]:
    """Δ-colouring of G[B ∪ C ∪ D] (its maximum-degree vertices are D) extended into A."""
    if spec.c == spec.d or spec.d == 0:
        raise CaseMismatch(f"needs c != d and d >= 1, got {spec}")
    g = _graph(spec)
    as_, bs, cs, ds = spec.blocks
    x = bs + cs + ds
    return extend_packing(g, x, as_, delta_color_class1(g.induced(x), budget=budget))


def _check_middle_case(spec: FourPartiteSpec) -> None:
    a, b, c, d = spec.parts
    if not (c + d < a <= b + c):
        raise CaseMismatch(f"needs c + d < a <= b + c, got {spec}")


def case1_ffactor_bound(spec: FourPartiteSpec) -> int:
    a, b, c, d = spec.parts
    return a * d + b * c - d


def packing_case1_ffactor(spec: FourPartiteSpec) -> list[Triangle]:
    """B–C and B–D edges plus an f-factor between C and D (degree a − b − 1 on D),
    coloured with at most a colours and extended into A."""
    _check_middle_case(spec)
    a, b, c, d = spec.parts
    if a < b + 1:
        raise CaseMismatch(f"needs a >= b + 1, got {spec}")
    g = _graph(spec)
    as_, bs, cs, ds = spec.blocks
    f = balanced_factor(c, d, a - b - 1, c_vertices=cs, d_vertices=ds)
    cd = g.induced(cs + ds)
    if not ore_ryser_feasible(cd, (cs, ds), f):
        raise TuzaError(f"balanced degree spec is infeasible for {spec}")
    h = f_factor(cd, (cs, ds), f)
    sub = Graph(g.n, g.edges_between(bs, cs + ds)).union(h)
    return extend_packing(g, bs + cs + ds, as_, vizing_color(sub))


def case1_bipartite_bound(spec: FourPartiteSpec) -> int:
    return spec.b * spec.c + spec.b * spec.d


def packing_case1_bipartite(spec: FourPartiteSpec) -> list[Triangle]:
    """König colouring of the B versus C ∪ D edges extended into A (a <= b + 1)."""
    _check_middle_case(spec)
    if spec.a > spec.b + 1:
        raise CaseMismatch(f"needs a <= b + 1, got {spec}")
    g = _graph(spec)
    as_, bs, cs, ds = spec.blocks
    sub = Graph(g.n, g.edges_between(bs, cs + ds))
    return extend_packing(g, bs + cs + ds, as_, konig_color(sub, (bs, cs + ds)))


# ------------------------------------------------------------------ certify


def case_name(spec: FourPartiteSpec) -> str:
    a, b, c, d = spec.parts
    if a >= b + c + 1:
        return "a>=b+c+1"
    if a > c + d:
        return "c+d<a<=b+c"
    return "a<=c+d"


def candidate_packings(spec: FourPartiteSpec, budget: int = DEFAULT_BUDGET) -> dict[str, list[Triangle]]:
    """Every packing construction that applies to ``spec``."""
    a, b, c, d = spec.parts
    out = {"claim1": packing_claim1(spec)}
    case = case_name(spec)
    if case == "c+d<a<=b+c":
        if a >= b + 1:
            out["case1-ffactor"] = packing_case1_ffactor(spec)
        if a <= b + 1:
            out["case1-bipartite"] = packing_case1_bipartite(spec)
    elif case == "a<=c+d":
        out["claim2"] = packing_claim2(spec)
        if c != d and d >= 1:
            out["claim3"] = packing_claim3(spec, budget=budget)
    return out


def certify(spec: FourPartiteSpec, budget: int = DEFAULT_BUDGET) -> TuzaCertificate:
    """Best packing and smallest hitting set over the applicable constructions."""
    if spec.n < 5 or spec.a < 2:
        raise SpecTooSmall(f"needs at least five vertices, got {spec}")
    g = _graph(spec)
    packings = candidate_packings(spec, budget)
    p_name = max(packings, key=lambda k: len(packings[k]))
    hittings = {}
    if case_name(spec) == "a>=b+c+1":
        hittings["bc+bd+cd"] = hitting_case1(spec)
    hittings["ad+bc"] = hitting_ad_bc(spec)
    h_name = min(hittings, key=lambda k: len(hittings[k]))
    cert = TuzaCertificate(
        packing=tuple(packings[p_name]),
        hitting=tuple(hittings[h_name]),
        ratio=certificate_ratio(len(hittings[h_name]), len(packings[p_name])),
        case_tag=f"{case_name(spec)}:{p_name}/{h_name}",
    )
    if not cert.validate(g):
        raise TuzaError(f"internal error: invalid certificate for {spec}")
    return cert


def sweep_specs(a_max: int, min_part: int = 1) -> list[FourPartiteSpec]:
    """All a >= b >= c >= d >= min_part with a <= a_max and at least five vertices."""
    out = []
    for a in range(2, a_max + 1):
        for b in range(min_part, a + 1):
            for c in range(min_part, b + 1):
                for d in range(min_part, c + 1):
                    if a + b + c + d >= 5:
                        out.append(FourPartiteSpec(a, b, c, d))
    return out
