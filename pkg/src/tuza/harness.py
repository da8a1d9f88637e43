"""Instance generators and theorem-verification experiments.

Randomness comes from numpy's PCG64 bit generator (64-bit seed, fixed
algorithm), so a seed reproduces the same instances on every platform.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any

import numpy as np

from . import bounds
from .errors import BudgetExceeded, Infeasible, NoInstance
from .fourpartite import (THREE_HALVES, FourPartiteSpec, build_complete_4partite, certify,
                          sweep_specs)
from .graph import CLIQUE, INDEPENDENT, Graph, PartitionedGraph
from .hitting import clique_edges_hitting
from .io import fraction_str, parse_fraction
from .oracles import DEFAULT_BUDGET, exact_nu, exact_tau

CSV_COLUMNS = ["instance_id", "n", "m", "parts", "nu_exact", "tau_exact", "bounds",
               "ratio", "pass", "note"]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


# ----------------------------------------------------------------- generators


def gen_split(n: int, delta_min: int, seed: int) -> PartitionedGraph:
    """Random split graph with minimum degree at least ``delta_min``.

    |K| is uniform on the feasible range [delta_min, n]; K occupies ids
    ``0..|K|-1``.  Each S vertex joins K with a random density, then degree
    deficits are repaired by adding cross edges.
    """
    if n < 0 or delta_min < 0 or (n > 0 and delta_min > n - 1):
        raise NoInstance(f"no split graph on {n} vertices has minimum degree {delta_min}")
    rng = make_rng(seed)
    k = int(rng.integers(min(delta_min, n), n + 1))
    ks, ss = list(range(k)), list(range(k, n))
    edges = set(combinations(ks, 2))
    p = rng.random()
    s_nbrs = {s: {x for x in ks if rng.random() < p} for s in ss}
    for s in ss:
        short = delta_min - len(s_nbrs[s])
        if short > 0:
            pool = [x for x in ks if x not in s_nbrs[s]]
            s_nbrs[s].update(int(x) for x in rng.choice(pool, size=short, replace=False))
    for x in ks:
        have = (k - 1) + sum(1 for s in ss if x in s_nbrs[s])
        if delta_min > have:
            pool = [s for s in ss if x not in s_nbrs[s]]
            for s in rng.choice(pool, size=delta_min - have, replace=False):
                s_nbrs[int(s)].add(x)
    edges |= {(x, s) for s in ss for x in s_nbrs[s]}
    pg = PartitionedGraph(Graph(n, edges), [(CLIQUE, ks), (INDEPENDENT, ss)])
    if pg.graph.min_degree < delta_min and n > 0:
        raise NoInstance("degree repair failed")
    return pg


def tripartite_capacity(sizes) -> int:
    p, q, r = sizes
    return p * q + p * r + q * r


def tripartite_shapes(n: int, m: int) -> list[tuple[int, int, int]]:
    """Sorted part sizes on n vertices that can carry m cross edges."""
    out = []
    for p in range(n, -1, -1):
        for q in range(min(p, n - p), -1, -1):
            r = n - p - q
            if r <= q and tripartite_capacity((p, q, r)) >= m:
                out.append((p, q, r))
    return out


def gen_tripartite(n: int, m: int, seed: int) -> PartitionedGraph:
    """Random tripartite graph with exactly ``m`` edges.

    The part sizes are drawn uniformly among those that can hold ``m`` edges.
    """
    shapes = tripartite_shapes(n, m) if m >= 0 else []
    if not shapes:
        raise Infeasible(f"no tripartite graph on {n} vertices has {m} edges")
    rng = make_rng(seed)
    sizes = shapes[int(rng.integers(len(shapes)))]
    blocks, start = [], 0
    for s in sizes:
        blocks.append(list(range(start, start + s)))
        start += s
    pairs = [(u, v) for i, j in combinations(range(3), 2) for u in blocks[i] for v in blocks[j]]
    pick = rng.choice(len(pairs), size=m, replace=False) if m else []
    g = Graph(n, [pairs[int(i)] for i in pick])
    return PartitionedGraph(g, [(INDEPENDENT, b) for b in blocks])


def max_tripartite_edges(n: int) -> int:
    return max(tripartite_capacity(s) for s in tripartite_shapes(n, 0))


# -------------------------------------------------------------------- reports


@dataclass
class ReportRow:
    instance_id: str
    n: int
    m: int
    parts: str
    nu_exact: int | None = None
    tau_exact: int | None = None
    bounds: dict[str, Any] = field(default_factory=dict)
    ratio: Any = None
    passed: bool | None = None
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["bounds"] = {k: fraction_str(v) for k, v in self.bounds.items()}
        d["ratio"] = fraction_str(self.ratio)
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ReportRow":
        d = dict(d)
        d["bounds"] = {k: parse_fraction(v) for k, v in d.get("bounds", {}).items()}
        d["ratio"] = parse_fraction(d.get("ratio"))
        return cls(**d)


@dataclass
class ExperimentReport:
    name: str
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def failures(self) -> list[str]:
        return [r.instance_id for r in self.rows if r.passed is False]

    @property
    def max_ratio(self):
        ratios = [r.ratio for r in self.rows if r.ratio is not None and r.passed is not None]
        return max(ratios, default=None)

    def summary(self) -> dict[str, Any]:
        return {
            "rows": len(self.rows),
            "checked": sum(1 for r in self.rows if r.passed is not None),
            "failed": len(self.failures),
            "max_ratio": fraction_str(self.max_ratio),
            "counterexamples": self.failures,
        }

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "rows": [r.to_dict() for r in self.rows],
                "summary": self.summary()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_json(cls, text: str) -> "ExperimentReport":
        d = json.loads(text)
        return cls(d["name"], [ReportRow.from_dict(r) for r in d["rows"]])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([
                r.instance_id, r.n, r.m, r.parts,
                "" if r.nu_exact is None else r.nu_exact,
                "" if r.tau_exact is None else r.tau_exact,
                ";".join(f"{k}:{fraction_str(v)}" for k, v in r.bounds.items()),
                fraction_str(r.ratio) or "",
                "" if r.passed is None else int(r.passed),
                r.note,
            ])
        return buf.getvalue()


def _ratio(tau: int, nu: int):
    if tau == 0:
        return Fraction(0)
    return Fraction(tau, nu) if nu else math.inf


def _child_seeds(seed: int, count: int) -> list[int]:
    rng = make_rng(seed)
    return [int(s) for s in rng.integers(0, 2**63 - 1, size=count, dtype=np.int64)]


# ---------------------------------------------------------------- experiments


def check_split(pg: PartitionedGraph, instance_id: str, budget: int = DEFAULT_BUDGET) -> ReportRow:
    """Row asserting τ <= 2ν on one split graph."""
    g = pg.graph
    k_part, s_part = pg.split_parts()
    row = ReportRow(instance_id, g.n, g.m, f"K{len(k_part)}|S{len(s_part)}")
    row.bounds = {
        "delta": Fraction(g.min_degree),
        "nu_lower_split": bounds.lower_bound_split(pg),
        "nu_lower_general": bounds.lower_bound_general(g),
        "tau_upper_clique": Fraction(len(clique_edges_hitting(pg))),
    }
    try:
        row.nu_exact = exact_nu(g, budget)[0]
        row.tau_exact = exact_tau(g, budget)[0]
    except BudgetExceeded as exc:
        row.note = f"budget: {exc}"
        return row
    row.ratio = _ratio(row.tau_exact, row.nu_exact)
    row.passed = row.tau_exact <= 2 * row.nu_exact
    if g.n <= 8:
        row.note = "n<=8: informational"
    return row


def verify_split_dense(trials: int, n_max: int, seed: int, n_min: int = 5,
                       budget: int = DEFAULT_BUDGET) -> ExperimentReport:
    """Random split graphs with δ >= ⌈3n/5⌉, each checked for τ <= 2ν."""
    report = ExperimentReport("verify-split")
    rng = make_rng(seed)
    for i, s in enumerate(_child_seeds(seed, trials)):
        n = int(rng.integers(n_min, n_max + 1))
        pg = gen_split(n, math.ceil(3 * n / 5), s)
        report.rows.append(check_split(pg, f"split-{i:04d}", budget))
    return report


def check_tripartite(pg: PartitionedGraph, instance_id: str,
                     budget: int = DEFAULT_BUDGET) -> ReportRow:
    """Row asserting τ <= n²/(3(4m − n²)) ν; sparse graphs are skipped."""
    g = pg.graph
    sizes = sorted((len(c.vertices) for c in pg.classes), reverse=True)
    row = ReportRow(instance_id, g.n, g.m, ",".join(map(str, sizes)))
    if 4 * g.m <= g.n * g.n:
        row.note = "skipped: m <= n^2/4"
        return row
    factor = bounds.tripartite_bound_factor(g.n, g.m)
    row.bounds = {
        "factor": factor,
        "bollobas_triangles": bounds.bollobas_triangle_bound(g.n, g.m),
        "tau_upper_two_smallest": Fraction(sizes[1] * sizes[2]),
    }
    try:
        row.nu_exact = exact_nu(g, budget)[0]
        row.tau_exact = exact_tau(g, budget)[0]
    except BudgetExceeded as exc:
        row.note = f"budget: {exc}"
        return row
    row.ratio = _ratio(row.tau_exact, row.nu_exact)
    row.passed = row.tau_exact <= factor * row.nu_exact
    return row


def verify_tripartite_dense(trials: int, n_max: int, seed: int, n_min: int = 3,
                            budget: int = DEFAULT_BUDGET) -> ExperimentReport:
    """Random tripartite graphs with m > n²/4, checked against the density factor."""
    report = ExperimentReport("verify-tripartite")
    rng = make_rng(seed)
    for i, s in enumerate(_child_seeds(seed, trials)):
        n = int(rng.integers(max(n_min, 3), n_max + 1))
        m = int(rng.integers(n * n // 4 + 1, max_tripartite_edges(n) + 1))
        pg = gen_tripartite(n, m, s)
        report.rows.append(check_tripartite(pg, f"tri-{i:04d}", budget))
    return report


def check_4partite(spec: FourPartiteSpec, exact_limit: int = 10,
                   budget: int = DEFAULT_BUDGET) -> ReportRow:
    g = build_complete_4partite(spec).graph
    row = ReportRow(f"k4p-{spec.a}-{spec.b}-{spec.c}-{spec.d}", g.n, g.m, str(spec))
    cert = certify(spec, budget=budget)
    row.ratio = cert.ratio
    row.bounds = {"packing": Fraction(len(cert.packing)), "hitting": Fraction(len(cert.hitting))}
    row.note = cert.case_tag
    ok = cert.ratio <= THREE_HALVES
    if g.n <= exact_limit:
        row.nu_exact = exact_nu(g, budget)[0]
        row.tau_exact = exact_tau(g, budget)[0]
        row.bounds["exact_ratio"] = _ratio(row.tau_exact, row.nu_exact)
        ok = ok and len(cert.packing) <= row.nu_exact and len(cert.hitting) >= row.tau_exact
        ok = ok and row.bounds["exact_ratio"] <= THREE_HALVES
    row.passed = ok
    if spec.d == 0:
        row.passed = None
        row.note += "; degenerate part, not asserted"
    return row


def sweep_4partite(a_max: int, exact_limit: int = 10, degenerate: bool = False,
                   budget: int = DEFAULT_BUDGET) -> ExperimentReport:
    """Certificates for every complete 4-partite graph with parts up to ``a_max``."""
    report = ExperimentReport("sweep-4partite")
    for spec in sweep_specs(a_max, min_part=0 if degenerate else 1):
        report.rows.append(check_4partite(spec, exact_limit, budget))
    return report
