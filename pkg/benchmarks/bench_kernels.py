"""Time the pure-Python and compiled kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json] [--quick]

Each kernel is run on a few graph families and the best of ``--repeat`` runs
is reported per backend, with the speedup. Outputs are checked for equality
before timing so the comparison is between identical computations.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from hycolor import _backend, _pykernels
from hycolor.generators import gnp, hamming
from hycolor.graph import Graph
from hycolor.solver import SolverConfig, solve


def road_like(k: int, keep: float, seed: int = 0) -> Graph:
    """Sparse grid with random diagonals, thinned to average degree ~2-4."""
    rng = np.random.default_rng(seed)
    idx = np.arange(k * k).reshape(k, k)
    e = np.concatenate([
        np.column_stack([idx[:, :-1].ravel(), idx[:, 1:].ravel()]),
        np.column_stack([idx[:-1, :].ravel(), idx[1:, :].ravel()]),
        np.column_stack([idx[:-1, :-1].ravel(), idx[1:, 1:].ravel()]),
    ])
    g = Graph.from_edges(k * k, e[rng.random(len(e)) < keep])
    g.name = f"road{k}x{k}"
    return g


def workloads(quick: bool) -> list[Graph]:
    rng = np.random.default_rng(1)
    out = [gnp(300 if quick else 1000, 0.1, rng), hamming(8, 4), road_like(100 if quick else 300, 0.6)]
    out[0].name = f"gnp{out[0].n}"
    return out


def kernel_calls(g: Graph):
    n = g.n
    alive = np.ones(n, dtype=np.uint8)
    deg = g.degrees.astype(np.int64)
    shell, peel = _pykernels.core_peel(g, None)
    order = peel.copy()
    ell = int(shell.max())
    start = int(np.argmax(deg))
    init = _pykernels.greedy_clique(g, None, start)
    calls = {
        "core_peel": lambda k: k.core_peel(g, alive),
        "reduce_cascade": lambda k: k.reduce_cascade(g, alive.copy(), deg.copy(), ell),
        "mdd_sort": lambda k: k.mdd_sort(g, alive, 7),
        "greedy_color": lambda k: k.greedy_color(g, order, 0),
        "dsatur": lambda k: k.dsatur(g, alive, deg),
        "greedy_clique": lambda k: k.greedy_clique(g, alive, start),
    }
    if n <= 1000:
        calls["clique_search"] = lambda k: k.clique_search(g, 0, init, lambda: False)
    return calls


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return len(a) == len(b) and all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    if isinstance(a, list) and a and isinstance(a[0], np.ndarray):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return a == b


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller graphs")
    ap.add_argument("--json", help="write results here")
    args = ap.parse_args(argv)

    if "cython" not in _backend.available():
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    from hycolor import _ckernels

    rows = []
    for g in workloads(args.quick):
        for name, call in kernel_calls(g).items():
            if not _same(call(_pykernels), call(_ckernels)):
                print(f"mismatch: {name} on {g.name}", file=sys.stderr)
                return 2
            tp = best_of(lambda: call(_pykernels), args.repeat)
            tc = best_of(lambda: call(_ckernels), args.repeat)
            rows.append(dict(graph=g.name, n=g.n, m=g.m, kernel=name, python=tp, cython=tc))

    # one end-to-end run per backend with the tick clock, so both do the same work
    g = workloads(args.quick)[0]
    cfg = SolverConfig(seed=1, cutoff=2.0, deterministic=True)
    prev = _backend.BACKEND
    times, results = {}, {}
    for b in ("python", "cython"):
        _backend.use(b)
        t = time.perf_counter()
        r = solve(g, cfg)
        times[b] = time.perf_counter() - t
        results[b] = (r.num_colors, r.lb_final, r.iterations)
    _backend.use(prev)
    if results["python"] != results["cython"]:
        print("mismatch: solve", results, file=sys.stderr)
        return 2
    rows.append(dict(graph=g.name, n=g.n, m=g.m, kernel="solve", python=times["python"], cython=times["cython"]))

    print(f"{'graph':<12} {'n':>7} {'m':>8} {'kernel':<15} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for r in rows:
        print(f"{r['graph']:<12} {r['n']:>7} {r['m']:>8} {r['kernel']:<15} "
              f"{r['python']:>10.4f} {r['cython']:>10.4f} {r['python'] / max(r['cython'], 1e-9):>7.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
