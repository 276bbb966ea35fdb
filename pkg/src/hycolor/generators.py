"""Small named graphs and random instances for tests and benchmarks."""

from __future__ import annotations

import itertools

import numpy as np

from .graph import Graph

# 13-vertex worked example, 1-based. Built to satisfy every stated fact of the
# walk-through: {4,5,12,13} is a maximum clique, vertices 1, 3, 6
# have degree < 4, after deleting them only 4 and 5 drop below 4, and the
# 8-vertex remainder is K(2,2,2,2) with parts {8,12}, {2,9}, {7,10}, {11,13}.
_EXAMPLE13_CORE = [2, 7, 8, 9, 10, 11, 12, 13]
_EXAMPLE13_NONEDGES = {(8, 12), (2, 9), (7, 10), (11, 13)}
_EXAMPLE13_EXTRA = [
    (4, 5), (4, 12), (4, 13), (5, 12), (5, 13),
    (1, 3), (1, 4), (1, 5),
    (6, 4), (6, 5), (6, 12),
    (3, 2), (3, 7),
]


def example13_edges() -> list[tuple[int, int]]:
    """Edge list of the 13-vertex example graph (1-based labels)."""
    core = [
        (a, b)
        for a, b in itertools.combinations(_EXAMPLE13_CORE, 2)
        if (a, b) not in _EXAMPLE13_NONEDGES and (b, a) not in _EXAMPLE13_NONEDGES
    ]
    return sorted(tuple(sorted(e)) for e in core + _EXAMPLE13_EXTRA)


def example13() -> Graph:
    e = np.asarray(example13_edges(), dtype=np.int64) - 1
    return Graph.from_edges(13, e, name="example13")


def complete(n: int) -> Graph:
    return Graph.from_edges(n, list(itertools.combinations(range(n), 2)), name=f"K{n}")


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], name=f"K1,{leaves}")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner, name="petersen")


def hamming(bits: int, dist: int, complement: bool = True) -> Graph:
    """Hamming graph on ``bits``-bit words.

    The clique-benchmark graph joins words at distance >= ``dist``; the
    coloring benchmark uses its complement (distance 1..dist-1), the default.
    """
    n = 1 << bits
    w = np.arange(n)
    d = np.array([[bin(int(x)).count("1") for x in row] for row in (w[:, None] ^ w[None, :])])
    adj = (d >= 1) & (d < dist) if complement else d >= dist
    u, v = np.nonzero(np.triu(adj, 1))
    return Graph.from_edges(n, np.column_stack([u, v]), name=f"hamming{bits}-{dist}")


def gnp(n: int, p: float, rng: np.random.Generator | int | None = None) -> Graph:
    rng = np.random.default_rng(rng)
    if n < 2:
        return Graph.from_edges(n, np.zeros((0, 2), dtype=np.int64))
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < p
    return Graph.from_edges(n, np.column_stack([iu[keep], ju[keep]]), name=f"gnp-{n}-{p}")
