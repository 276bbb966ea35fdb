"""Clique-based lower bounds on the chromatic number.

Any clique of the working graph is a valid lower bound. Two searches live
here: a fast restart-greedy heuristic run every solver iteration, and an
exact branch and bound applied to a growing dense "test set" around the
highest-degree vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _backend
from .clock import Deadline, RealClock
from .graph import Graph, WorkingGraph

SIZE_UPPER = 1000
EXACTLB_BUDGET = 1.0
FINDCLQ_BUDGET = 0.05


@dataclass(frozen=True)
class Clique:
    vertices: tuple[int, ...]

    @classmethod
    def of(cls, vertices) -> "Clique":
        return cls(tuple(sorted(int(v) for v in vertices)))

    @property
    def size(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def is_clique_in(self, g: Graph) -> bool:
        vs = self.vertices
        return all(g.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))


class CliqueResult(NamedTuple):
    clique: Clique
    exact: bool
    nodes: int


@dataclass
class TestSet:
    """Vertex set grown around a maximum-degree seed for the exact search."""

    members: set[int]
    size_upper: int = SIZE_UPPER

    def __len__(self) -> int:
        return len(self.members)


def find_clique_heuristic(
    w: WorkingGraph,
    rng: np.random.Generator,
    budget: float = FINDCLQ_BUDGET,
    clock=None,
) -> Clique:
    """Best greedy clique over restarts from the top-degree decile.

    Start vertices are drawn without replacement; the search stops when the
    budget expires, all starts are used, or the clique reaches the trivial
    ``max degree + 1`` bound.
    """
    verts = w.vertices()
    if len(verts) == 0:
        raise ValueError("working graph is empty")
    clock = clock or RealClock()
    deg = w.degree[verts]
    ranked = verts[np.lexsort((verts, -deg))]
    top = ranked[: max(1, math.ceil(len(ranked) / 10))]
    upper = int(deg.max()) + 1
    deadline = Deadline(clock, budget)
    best: list[int] = []
    for s in rng.permutation(top).tolist():
        c = _backend.kernels.greedy_clique(w.base, w.alive, s)
        if len(c) > len(best):
            best = c
        if len(best) >= upper or deadline.expired():
            break
    return Clique.of(best)


def max_clique_exact(
    g: Graph,
    lower: int = 0,
    budget: float = EXACTLB_BUDGET,
    clock=None,
    deadline: Deadline | None = None,
    check_every: int = 1024,
) -> CliqueResult:
    """Branch and bound for a maximum clique of ``g``.

    Only cliques larger than ``lower`` are searched for. ``exact=True`` means
    the search finished: the returned clique is maximum, or no clique larger
    than ``lower`` exists. On timeout the best clique seen is returned with
    ``exact=False``.
    """
    if g.n == 0:
        return CliqueResult(Clique(()), True, 0)
    if deadline is None:
        deadline = Deadline(clock or RealClock(), budget)
    start = int(np.argmax(g.degrees))
    init = _backend.kernels.greedy_clique(g, None, start)
    best, done, nodes = _backend.kernels.clique_search(g, lower, init, deadline.expired, check_every)
    return CliqueResult(Clique.of(best), bool(done), int(nodes))


def exact_lb_search(
    w: WorkingGraph,
    lb_k: int,
    budget: float = EXACTLB_BUDGET,
    size_upper: int = SIZE_UPPER,
    clock=None,
) -> Clique | None:
    """Grow a test set and search it exactly for a clique larger than ``lb_k``.

    Returns the improving clique (working-graph ids) or ``None``.
    """
    if w.is_empty:
        return None
    clock = clock or RealClock()
    deadline = Deadline(clock, budget)
    g = w.base
    alive = w.alive
    masked = np.where(alive.astype(bool), w.degree, -1)
    u = int(np.argmax(masked))

    def nbrs(v: int) -> list[int]:
        return w.alive_neighbors(v).tolist()

    test = TestSet({u, *nbrs(u)}, size_upper)
    members = test.members
    boundary: dict[int, int] = {}
    for x in members:
        for y in nbrs(x):
            if y not in members:
                boundary[y] = boundary.get(y, 0) + 1

    solved_once = False
    while not deadline.expired():
        if boundary:
            degree = w.degree
            v = min(boundary, key=lambda y: (boundary[y] - int(degree[y]), y))
            added = [x for x in (v, *nbrs(v)) if x not in members]
            for x in added:
                members.add(x)
                boundary.pop(x, None)
            for x in added:
                for y in nbrs(x):
                    if y not in members:
                        boundary[y] = boundary.get(y, 0) + 1
        elif solved_once:
            return None
        if len(members) >= size_upper:
            return None
        verts = np.asarray(sorted(members), dtype=np.int64)
        res = max_clique_exact(g.subgraph(verts), lower=lb_k, deadline=deadline)
        solved_once = True
        if res.clique.size > lb_k:
            return Clique.of(verts[list(res.clique.vertices)].tolist())
    return None


def exact_lb(
    w: WorkingGraph,
    lb_k: int,
    budget: float = EXACTLB_BUDGET,
    size_upper: int = SIZE_UPPER,
    clock=None,
) -> int:
    """Lower bound from the exact test-set search; never below ``lb_k``."""
    c = exact_lb_search(w, lb_k, budget, size_upper, clock)
    return c.size if c is not None else lb_k
