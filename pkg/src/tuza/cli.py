"""Command-line interface: ``tuza <command> ...`` (or ``python3 -m tuza``).

Graph inputs use the JSON format from :mod:`tuza.io`; ``-`` reads stdin.
Exit status is 0 on success, 1 when a report has failed rows and 2 on
invalid input or an unsatisfied precondition.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any

from . import bounds, io
from .coloring import delta_color_class1, konig_color, vizing_color
from .errors import GraphFormatError, TuzaError
from .flow import f_factor
from .fourpartite import FourPartiteSpec, build_complete_4partite, certify
from .graph import PartitionedGraph
from .harness import (ExperimentReport, gen_split, gen_tripartite, sweep_4partite,
                      verify_split_dense, verify_tripartite_dense)
from .hitting import clique_edges_hitting, cut_complement_hitting
from .oracles import DEFAULT_BUDGET, exact_max_cut, exact_nu, exact_tau

log = logging.getLogger("tuza")


def _read_graph(path: str) -> PartitionedGraph:
    if path == "-":
        return io.loads(sys.stdin.read())
    try:
        return io.load(path)
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc


def _parts(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(args, payload: Any) -> None:
    if isinstance(payload, ExperimentReport):
        text = payload.to_csv() if args.format == "csv" else payload.to_json()
    else:
        text = json.dumps(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text.rstrip("\n"))


def _edges(es) -> list[list[int]]:
    return [list(e) for e in es]


# ------------------------------------------------------------------ commands


def cmd_gen(args) -> Any:
    if args.kind == "split":
        if args.n is None or args.delta_min is None:
            raise GraphFormatError("gen split needs --n and --delta-min")
        return io.graph_to_dict(gen_split(args.n, args.delta_min, args.seed))
    if args.kind == "tripartite":
        if args.n is None or args.m is None:
            raise GraphFormatError("gen tripartite needs --n and --m")
        return io.graph_to_dict(gen_tripartite(args.n, args.m, args.seed))
    if args.parts is None:
        raise GraphFormatError("gen multipartite needs --parts")
    return io.graph_to_dict(PartitionedGraph.complete_multipartite(args.parts))


def cmd_bounds(args) -> Any:
    pg = _read_graph(args.graph)
    return {k: io.fraction_str(v) for k, v in bounds.all_bounds(pg).items()}


def cmd_color(args) -> Any:
    pg = _read_graph(args.graph)
    if args.method == "konig":
        if len(pg.classes) != 2:
            raise GraphFormatError("konig needs exactly two vertex classes as the bipartition")
        classes = konig_color(pg.graph, (pg.vertices(0), pg.vertices(1)))
    elif args.method == "vizing":
        classes = vizing_color(pg.graph)
    else:
        classes = delta_color_class1(pg.graph, budget=args.budget)
    return [_edges(c) for c in classes]


def cmd_ffactor(args) -> Any:
    pg = _read_graph(args.graph)
    if len(pg.classes) != 2:
        raise GraphFormatError("ffactor needs exactly two vertex classes as the sides")
    try:
        with open(args.degrees) as fh:
            raw = json.load(fh)
        f = {int(k): int(v) for k, v in raw.items()}
    except (OSError, ValueError, AttributeError) as exc:
        raise GraphFormatError(f"bad degree map {args.degrees}: {exc}") from exc
    h = f_factor(pg.graph, (pg.vertices(0), pg.vertices(1)), f)
    return {"edges": _edges(h.sorted_edges)}


def cmd_hit(args) -> Any:
    pg = _read_graph(args.graph)
    if args.method == "clique":
        h = clique_edges_hitting(pg)
    else:
        h = cut_complement_hitting(pg.graph, seed=args.seed)
    return {"size": len(h), "edges": _edges(h)}


def cmd_nu(args) -> Any:
    value, packing = exact_nu(_read_graph(args.graph).graph, budget=args.budget)
    return {"nu": value, "packing": [list(t) for t in packing]}


def cmd_tau(args) -> Any:
    value, hitting = exact_tau(_read_graph(args.graph).graph, budget=args.budget)
    return {"tau": value, "hitting": _edges(hitting)}


def cmd_maxcut(args) -> Any:
    value, (side1, side0) = exact_max_cut(_read_graph(args.graph).graph)
    return {"cut": value, "sides": [side1, side0]}


def cmd_certify(args) -> Any:
    spec = FourPartiteSpec.of(args.parts)
    cert = certify(spec, budget=args.budget)
    out = {
        "parts": list(spec.parts),
        "case_tag": cert.case_tag,
        "ratio": io.fraction_str(cert.ratio),
        "packing_size": len(cert.packing),
        "hitting_size": len(cert.hitting),
        "triangles": [list(t) for t in cert.packing],
        "hitting": _edges(cert.hitting),
    }
    if args.exact:
        g = build_complete_4partite(spec).graph
        out["nu_exact"] = exact_nu(g, budget=args.budget)[0]
        out["tau_exact"] = exact_tau(g, budget=args.budget)[0]
    return out


def cmd_verify_split(args) -> ExperimentReport:
    return verify_split_dense(args.trials, args.n_max, args.seed, budget=args.budget)


def cmd_verify_tripartite(args) -> ExperimentReport:
    return verify_tripartite_dense(args.trials, args.n_max, args.seed, budget=args.budget)


def cmd_sweep(args) -> ExperimentReport:
    return sweep_4partite(args.a_max, exact_limit=args.exact_limit,
                          degenerate=args.degenerate, budget=args.budget)


# -------------------------------------------------------------------- parser


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    # on subcommands the defaults are suppressed so a flag given before the
    # subcommand name is not overwritten
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--seed", type=int, default=d(0), help="RNG seed (PCG64)")
    p.add_argument("--budget", type=int, default=d(DEFAULT_BUDGET),
                   help="search-node budget for exact solvers")
    p.add_argument("--format", choices=["json", "csv"], default=d("json"),
                   help="report format (reports only; other output is JSON)")
    p.add_argument("--out", default=d(None), help="write output to this path")
    p.add_argument("-v", "--verbose", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tuza", description=__doc__.splitlines()[0])
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph=True):
        p = sub.add_parser(name, help=help_text)
        _add_globals(p, suppress=True)
        if graph:
            p.add_argument("graph", help="graph JSON path, or - for stdin")
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "generate a graph", graph=False)
    p.add_argument("kind", choices=["split", "tripartite", "multipartite"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--delta-min", type=int)
    p.add_argument("--parts", type=_parts)

    add("bounds", cmd_bounds, "all applicable bounds")
    p = add("color", cmd_color, "edge colouring")
    p.add_argument("--method", choices=["konig", "vizing", "class1"], default="vizing")
    p = add("ffactor", cmd_ffactor, "bipartite f-factor")
    p.add_argument("degrees", help="JSON object mapping vertex to degree")
    p = add("hit", cmd_hit, "constructive hitting set")
    p.add_argument("--method", choices=["clique", "cut"], default="cut")
    add("nu", cmd_nu, "exact packing number")
    add("tau", cmd_tau, "exact hitting number")
    add("maxcut", cmd_maxcut, "exact maximum cut")

    p = add("certify-4partite", cmd_certify, "certificate for a complete 4-partite graph",
            graph=False)
    p.add_argument("--parts", type=_parts, required=True)
    p.add_argument("--exact", action="store_true", help="also run the exact oracles")

    for name, func, n_max in [("verify-split", cmd_verify_split, 12),
                              ("verify-tripartite", cmd_verify_tripartite, 12)]:
        p = add(name, func, f"{name.split('-')[1]} theorem check on random graphs", graph=False)
        p.add_argument("--trials", type=int, default=100)
        p.add_argument("--n-max", type=int, default=n_max)

    p = add("sweep-4partite", cmd_sweep, "certify all complete 4-partite graphs", graph=False)
    p.add_argument("--a-max", type=int, default=6)
    p.add_argument("--exact-limit", type=int, default=10,
                   help="run exact oracles up to this many vertices")
    p.add_argument("--degenerate", action="store_true", help="include empty parts")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        result = args.func(args)
    except TuzaError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _emit(args, result)
    if isinstance(result, ExperimentReport):
        return 1 if result.failures else 0
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
