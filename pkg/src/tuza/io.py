"""Graph JSON format.

``{"n": int, "classes": [{"role": "clique"|"independent", "vertices": [...]}, ...],
"edges": [[u, v], ...]}``.  ``classes`` may be empty.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import GraphFormatError
from .graph import Graph, PartitionedGraph


def graph_from_dict(data: dict[str, Any]) -> PartitionedGraph:
    if not isinstance(data, dict):
        raise GraphFormatError("graph JSON must be an object")
    if "n" not in data:
        raise GraphFormatError("graph JSON is missing field 'n'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError(f"'n' must be a non-negative integer, got {n!r}")
    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphFormatError("'edges' must be a list of [u, v] pairs")
    seen = set()
    for e in raw_edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphFormatError(f"malformed edge {e!r}")
        key = (min(e), max(e))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {e!r}")
        seen.add(key)
    g = Graph(n, raw_edges)
    classes = []
    for c in data.get("classes", []) or []:
        if not isinstance(c, dict) or "role" not in c or "vertices" not in c:
            raise GraphFormatError(f"malformed class {c!r}")
        classes.append((c["role"], c["vertices"]))
    return PartitionedGraph(g, classes)


def graph_to_dict(g: Graph | PartitionedGraph) -> dict[str, Any]:
    if isinstance(g, PartitionedGraph):
        classes = [{"role": c.role, "vertices": sorted(c.vertices)} for c in g.classes]
        g = g.graph
    else:
        classes = []
    return {"n": g.n, "classes": classes, "edges": [list(e) for e in g.sorted_edges]}


def loads(text: str) -> PartitionedGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return graph_from_dict(data)


def load(path) -> PartitionedGraph:
    with open(path) as fh:
        return loads(fh.read())


def dumps(g: Graph | PartitionedGraph) -> str:
    return json.dumps(graph_to_dict(g))


def fraction_str(x) -> str | None:
    """Exact rational as ``"p/q"`` (or ``"p"``); infinities as ``"inf"``."""
    if x is None:
        return None
    if isinstance(x, float) and x == float("inf"):
        return "inf"
    return str(Fraction(x))


def parse_fraction(s):
    if s is None:
        return None
    if s == "inf":
        return float("inf")
    return Fraction(s)
