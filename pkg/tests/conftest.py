"""Shared fixtures, graph strategies and independent oracles."""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

import networkx as nx
import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from hycolor import _backend
from hycolor.graph import Graph

DATA = Path(__file__).parent / "data"

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    return Graph.from_edges(n, np.asarray(edges, dtype=np.int64).reshape(-1, 2))


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < p
    return Graph.from_edges(n, np.column_stack([iu[keep], ju[keep]]))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges().tolist())
    return h


def naive_shells(g: Graph, alive=None) -> np.ndarray:
    """Shell numbers by repeatedly deleting a minimum-degree vertex. O(n^2)."""
    left = set(range(g.n)) if alive is None else {v for v in range(g.n) if alive[v]}
    adj = [set(a) for a in g.adj]
    shell = np.full(g.n, -1, dtype=np.int64)
    k = 0
    while left:
        deg = {v: len(adj[v] & left) for v in left}
        v = min(left, key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        shell[v] = k
        left.remove(v)
    return shell


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(to_nx(g)))


def chromatic_by_enumeration(g: Graph) -> int:
    """Try every assignment with k colors, k = 1, 2, ...; only for n <= 8."""
    assert g.n <= 8
    if g.n == 0:
        return 0
    edges = g.edges().tolist()
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    return g.n


def is_proper(g: Graph, colors) -> bool:
    a = np.asarray(colors)
    return bool((a >= 0).all()) and all(a[u] != a[v] for u, v in g.edges().tolist())


@pytest.fixture(params=_backend.available())
def backend(request):
    """Run a test once per available kernel backend."""
    prev = _backend.BACKEND
    _backend.use(request.param)
    yield request.param
    _backend.use(prev)


@pytest.fixture
def karate_path() -> Path:
    return DATA / "soc-karate.txt"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
