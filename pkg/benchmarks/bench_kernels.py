"""Time the numba kernels against the fallback selected by TUZA_DISABLE_NUMBA.

    python3 benchmarks/bench_kernels.py [--repeat 3]

The fallback is measured in a child process started with
``TUZA_DISABLE_NUMBA=1``: vectorised numpy for triangles, max cut and
Ore-Ryser, interpreted Python for the branch-and-bound searches.  Each
timing is the best of ``--repeat`` runs after one warm-up call, so numba
compilation is excluded.  The searches run to a fixed node budget, so the
rows compare node throughput.
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time
from itertools import combinations

import numpy as np

from tuza import _jit, kernels
from tuza.graph import Graph
from tuza.oracles import _TriangleIndex

SEARCH_NODES = 50_000


def best_time(fn, repeat: int) -> float:
    fn()
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def random_graph(rng, n, p):
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def cases(seed: int):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, 120, 0.3)
    adj = g.adjacency_matrix
    yield "triangles n=120", lambda: kernels.triangles(adj)

    g = random_graph(rng, 20, 0.5)
    eu = np.array([e[0] for e in g.sorted_edges], dtype=np.int64)
    ev = np.array([e[1] for e in g.sorted_edges], dtype=np.int64)
    yield "max_cut n=20", lambda: kernels.max_cut(g.n, eu, ev)

    adj_cd = np.ones((8, 16), dtype=np.uint8)
    f_c, f_d = np.full(8, 6), np.full(16, 3)
    yield "ore_ryser 8x16", lambda: kernels.ore_ryser_violated(f_c, f_d, adj_cd)

    k11 = _TriangleIndex(Graph.complete(11), 2000)
    pargs = (k11.tri_e, k11.e_ptr, k11.e_tri, k11.eu, k11.ev, 11, 0, 10**9, SEARCH_NODES)
    yield f"packing B&B K_11 {SEARCH_NODES} nodes", lambda: kernels.max_packing_search(*pargs)

    g = random_graph(np.random.default_rng(seed + 1), 14, 0.8)
    idx = _TriangleIndex(g, 2000)
    hargs = (idx.tri_e, idx.e_ptr, idx.e_tri, len(idx.edges), len(idx.edges), 0, SEARCH_NODES)
    yield f"hitting B&B n=14 {SEARCH_NODES} nodes", lambda: kernels.min_hitting_search(*hargs)


def measure(seed: int, repeat: int) -> dict[str, float]:
    return {name: best_time(fn, repeat) for name, fn in cases(seed)}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps(measure(args.seed, args.repeat)))
        return
    if not _jit.USE_NUMBA:
        raise SystemExit("numba is disabled in this process; unset TUZA_DISABLE_NUMBA")
    fast = measure(args.seed, args.repeat)
    env = dict(os.environ, TUZA_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, __file__, "--child", "--seed", str(args.seed),
                          "--repeat", "1"], env=env, capture_output=True, text=True, check=True)
    slow = json.loads(out.stdout)
    print(f"{'kernel':<34}{'numba [s]':>11}{'fallback [s]':>14}{'speed-up':>10}")
    for name, tf in fast.items():
        ts = slow[name]
        print(f"{name:<34}{tf:>11.5f}{ts:>14.5f}{ts / tf:>9.1f}x")


if __name__ == "__main__":
    main()
