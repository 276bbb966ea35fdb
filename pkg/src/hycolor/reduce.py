"""Low-degree vertex reduction and the reverse-order extension of colorings.

A vertex whose degree in the working graph is below a lower bound ``ell`` on
the chromatic number can be deleted: whatever coloring the rest receives,
there is always a free color among the first ``ell`` once it is put back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _backend
from .coloring import Coloring, is_proper_partial
from .graph import Graph, WorkingGraph


@dataclass
class DeletionStack:
    """Deleted vertices in deletion order with the bound in force at each push."""

    vertices: list[int] = field(default_factory=list)
    ells: list[int] = field(default_factory=list)

    def push(self, vertices, ell: int) -> None:
        vs = [int(v) for v in vertices]
        self.vertices.extend(vs)
        self.ells.extend([ell] * len(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    @property
    def max_ell(self) -> int:
        return max(self.ells, default=0)

    def replay_ok(self, g: Graph) -> bool:
        """Every entry had fewer than its ``ell`` neighbors left when deleted.

        Deletions are replayed one at a time starting from ``g``; within a
        round that can only lower degrees, so round-wise deletion passes too.
        """
        if len(set(self.vertices)) != len(self.vertices):
            return False
        gone = np.zeros(g.n, dtype=bool)
        adj = g.adj
        for v, ell in zip(self.vertices, self.ells):
            if sum(1 for u in adj[v] if not gone[u]) >= ell:
                return False
            gone[v] = True
        return True


@dataclass
class Reduction:
    removed: list[int]
    rounds: list[list[int]]

    @property
    def reduced(self) -> bool:
        return bool(self.removed)

    def __iter__(self):
        return iter((self.removed, self.reduced))


def redu_rule(w: WorkingGraph, ell: int, stack: DeletionStack | None = None) -> Reduction:
    """Delete every vertex of dynamic degree < ``ell``, cascading until none is left.

    Unpacks as ``(removed, reduced)``; ``.rounds`` holds the per-round sets.
    """
    removed, sizes = _backend.kernels.reduce_cascade(w.base, w.alive, w.degree, int(ell))
    removed = removed.tolist()
    w.n_alive -= len(removed)
    rounds = []
    i = 0
    for s in sizes:
        rounds.append(removed[i : i + s])
        i += s
    if stack is not None and removed:
        stack.push(removed, int(ell))
    return Reduction(removed, rounds)


def extend_coloring(g: Graph, partial: Coloring, stack: DeletionStack, ell: int | None = None) -> Coloring:
    """Color stack entries in reverse deletion order with the smallest free color.

    ``partial`` must color exactly the vertices not on the stack. Each entry
    is checked against its recorded bound (or ``ell`` when given).
    """
    a = partial.assign.copy()
    if len(a) != g.n:
        raise ValueError("partial coloring length does not match the graph")
    if not is_proper_partial(g, partial):
        raise ValueError("partial coloring is not proper")
    on_stack = np.zeros(g.n, dtype=bool)
    if len(stack):
        on_stack[np.asarray(stack.vertices)] = True
    if (a[on_stack] >= 0).any() or (a[~on_stack] < 0).any():
        raise ValueError("stack does not match the uncolored vertices")
    adj = g.adj
    col = a.tolist()
    for v, bound in zip(reversed(stack.vertices), reversed(stack.ells)):
        colored = [col[u] for u in adj[v] if col[u] >= 0]
        if len(colored) >= (ell if ell is not None else bound):
            raise ValueError(f"vertex {v} has too many colored neighbors for its bound")
        used = set(colored)
        c = 0
        while c in used:
            c += 1
        col[v] = c
    return Coloring(np.asarray(col, dtype=np.int64))
