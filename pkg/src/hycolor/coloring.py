"""Upper bounds: core/mixed-degree greedy coloring, one-move repair, DSatur."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, NamedTuple

import numpy as np

from . import _backend, _pykernels
from .graph import Graph, WorkingGraph, core_decompose

LAMBDA = 0.7
ALPHA = 0.2


@dataclass
class Coloring:
    """Per-vertex colors, -1 for unassigned."""

    assign: np.ndarray

    def __post_init__(self) -> None:
        self.assign = np.asarray(self.assign, dtype=np.int64)

    @classmethod
    def empty(cls, n: int) -> "Coloring":
        return cls(np.full(n, -1, dtype=np.int64))

    @property
    def num_colors(self) -> int:
        a = self.assign
        return len(np.unique(a[a >= 0]))

    @property
    def is_total(self) -> bool:
        return bool((self.assign >= 0).all())

    def __len__(self) -> int:
        return len(self.assign)

    def restrict(self, alive: np.ndarray) -> "Coloring":
        """Drop colors outside ``alive`` and relabel the rest to ``0..k-1``."""
        a = np.where(alive.astype(bool), self.assign, -1)
        return Coloring(a).compact()

    def compact(self) -> "Coloring":
        a = self.assign
        used = a >= 0
        out = np.full_like(a, -1)
        if used.any():
            _, inv = np.unique(a[used], return_inverse=True)
            out[used] = inv
        return Coloring(out)


class Verdict(NamedTuple):
    ok: bool
    edge: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.ok


def verify_coloring(g: Graph, c: Coloring) -> Verdict:
    """Check a total coloring; reports the lexicographically first bad edge."""
    a = c.assign
    if len(a) != g.n:
        raise ValueError("coloring length does not match the graph")
    if not c.is_total:
        raise ValueError("coloring is not total")
    e = g.edges()
    bad = np.flatnonzero(a[e[:, 0]] == a[e[:, 1]])
    if len(bad):
        u, v = e[bad[0]].tolist()
        return Verdict(False, (u, v))
    return Verdict(True, None)


def is_proper_partial(g: Graph, c: Coloring) -> bool:
    a = c.assign
    e = g.edges()
    cu = a[e[:, 0]]
    cv = a[e[:, 1]]
    return not bool(((cu == cv) & (cu >= 0)).any())


def lambda_tenths(lam: float) -> int:
    """``lam`` as an integer count of tenths; mixed degrees are scaled by 10."""
    if not 0 <= lam <= 1:
        raise ValueError("lambda must lie in [0, 1]")
    t = Fraction(lam).limit_denominator(1000) * 10
    if t.denominator != 1:
        raise ValueError("lambda must be a multiple of 0.1")
    return int(t)


@dataclass
class MixedDegreeState:
    """Reference bookkeeping for the mixed-degree ordering (no buckets)."""

    w: WorkingGraph
    lam: float = LAMBDA
    placed: set = field(default_factory=set)
    r_deg: dict = field(init=False)
    e_deg: dict = field(init=False)

    def __post_init__(self) -> None:
        self.r_deg = {int(v): int(self.w.degree[v]) for v in self.w.vertices()}
        self.e_deg = dict.fromkeys(self.r_deg, 0)

    def key(self, v: int) -> int:
        return 10 * self.r_deg[v] + lambda_tenths(self.lam) * self.e_deg[v]

    def mixed_degree(self, v: int) -> float:
        return self.r_deg[v] + self.lam * self.e_deg[v]

    def unplaced(self) -> list[int]:
        return [v for v in self.r_deg if v not in self.placed]

    def place(self, vertices: list[int]) -> None:
        for v in vertices:
            self.placed.add(v)
        for v in vertices:
            for u in self.w.alive_neighbors(v).tolist():
                if u not in self.placed:
                    self.r_deg[u] -= 1
                    self.e_deg[u] += 1


def mdd_sort_rounds(w: WorkingGraph, lam: float = LAMBDA) -> Iterator[tuple[list[int], MixedDegreeState]]:
    """Yield each round's placed set with the state after placing it. O(n^2)."""
    st = MixedDegreeState(w, lam)
    while True:
        rest = st.unplaced()
        if not rest:
            return
        low = min(st.key(v) for v in rest)
        sel = sorted(v for v in rest if st.key(v) == low)
        st.place(sel)
        yield sel, st


def mdd_sort(w: WorkingGraph, lam: float = LAMBDA) -> np.ndarray:
    """Alive vertices ordered by repeatedly extracting all minimum mixed-degree vertices."""
    return _backend.kernels.mdd_sort(w.base, w.alive, lambda_tenths(lam))


@dataclass
class MddOrder:
    sequence: np.ndarray
    layer_boundaries: np.ndarray
    reordered: bool = False


def mdd_order(
    w: WorkingGraph,
    rng: np.random.Generator | None = None,
    alpha: float = ALPHA,
    lam: float = LAMBDA,
) -> MddOrder:
    """Peel order of the core decomposition; with probability ``alpha`` each
    shell layer is re-sorted by position in the mixed-degree ordering."""
    core = core_decompose(w)
    seq = core.peel_order
    reordered = False
    if rng is not None and alpha > 0 and rng.random() < alpha:
        rank = np.zeros(w.base.n, dtype=np.int64)
        mdd = mdd_sort(w, lam)
        rank[mdd] = np.arange(len(mdd))
        seq = seq[np.lexsort((rank[seq], core.shell[seq]))]
        reordered = True
    s = core.shell[seq]
    cuts = np.flatnonzero(np.diff(s)) + 1
    bounds = np.concatenate([[0], cuts, [len(s)]]).astype(np.int64)
    return MddOrder(seq, bounds, reordered)


def mdd_color(w: WorkingGraph, incumbent: Coloring | None, order: MddOrder) -> Coloring:
    """Greedy coloring in reverse order.

    With an incumbent of ``k`` colors, a vertex that would open color ``k``
    gets one repair attempt; if that fails the incumbent is returned as is.
    """
    if len(order.sequence) != w.n_alive:
        raise ValueError("order must cover exactly the alive vertices")
    limit = incumbent.num_colors if incumbent is not None else 0
    col, ok = _backend.kernels.greedy_color(w.base, order.sequence, limit)
    if not ok:
        return incumbent
    return Coloring(col)


def recolor(w: WorkingGraph, partial: Coloring, v: int, limit: int) -> tuple[bool, Coloring]:
    """Try to free a color below ``limit`` for ``v`` by moving its unique
    holder among ``v``'s neighbors to another color below ``limit``."""
    cols = partial.assign.tolist()
    if cols[v] >= 0:
        raise ValueError(f"vertex {v} is already colored")
    ok = _pykernels.recolor(w.base, cols, v, limit)
    return ok, (Coloring(cols) if ok else partial)


def dsatur(w: WorkingGraph) -> Coloring:
    if w.is_empty:
        raise ValueError("working graph is empty")
    return Coloring(_backend.kernels.dsatur(w.base, w.alive, w.degree))
