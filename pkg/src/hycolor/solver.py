"""The main bound-and-reduce loop.

Each iteration tries to raise the clique lower bound (greedy, then exact on a
small dense test set), strips vertices whose degree is below that bound, and
recolors what is left. The loop ends at the cutoff, when the bounds meet, or
when reduction empties the working graph; deleted vertices are then put back
in reverse order with the smallest free color.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .bounds import EXACTLB_BUDGET, FINDCLQ_BUDGET, SIZE_UPPER, Clique, exact_lb_search, find_clique_heuristic
from .clock import RealClock, TickClock
from .coloring import ALPHA, LAMBDA, Coloring, dsatur, lambda_tenths, mdd_color, mdd_order, verify_coloring
from .graph import Graph, WorkingGraph
from .reduce import DeletionStack, extend_coloring, redu_rule

log = logging.getLogger(__name__)

__all__ = [
    "SolverConfig",
    "BoundsState",
    "SolveResult",
    "InvariantError",
    "solve",
    "verify_coloring",
    "brute_force_chromatic",
]


class InvariantError(RuntimeError):
    """A solver result failed its own consistency checks."""


@dataclass(frozen=True)
class SolverConfig:
    cutoff: float = 60.0
    seed: int = 1
    alpha: float = ALPHA
    lam: float = LAMBDA
    exactlb_budget: float = EXACTLB_BUDGET
    size_upper: int = SIZE_UPPER
    findclq_budget: float = FINDCLQ_BUDGET
    deterministic: bool = False
    tick: float = 1e-3

    def __post_init__(self) -> None:
        for name in ("cutoff", "exactlb_budget", "findclq_budget", "tick"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not 0 <= self.alpha <= 1:
            raise ValueError("alpha must lie in [0, 1]")
        lambda_tenths(self.lam)
        if self.size_upper < 1:
            raise ValueError("size_upper must be positive")

    def make_clock(self):
        return TickClock(self.tick) if self.deterministic else RealClock()


@dataclass
class BoundsState:
    lb_star: int = 0
    ub_star: int = 0
    last_lb_e: int = 0
    exactlb_enabled: bool = True
    reduced_this_iter: bool = False
    lb_source: str = ""
    ub_source: str = ""


@dataclass
class SolveResult:
    coloring: Coloring
    num_colors: int
    lb_final: int
    optimal: bool
    time_to_best: float
    iterations: int
    clique: tuple[int, ...] = ()
    trace: list[tuple[int, int, int]] = field(default_factory=list)

    def summary(self) -> str:
        opt = "true" if self.optimal else "false"
        return f"s {self.num_colors} lb={self.lb_final} optimal={opt} time={self.time_to_best:.3f}"


def solve(g: Graph, cfg: SolverConfig | None = None, clock=None) -> SolveResult:
    """Color ``g`` and report the best clique bound found alongside."""
    cfg = cfg or SolverConfig()
    n = g.n
    if n == 0:
        return SolveResult(Coloring.empty(0), 0, 0, True, 0.0, 0)
    clock = clock or cfg.make_clock()
    t0 = clock.now()

    def elapsed() -> float:
        return clock.now() - t0

    clq_seq, ord_seq = np.random.SeedSequence(cfg.seed).spawn(2)
    rng_clq = np.random.default_rng(clq_seq)
    rng_ord = np.random.default_rng(ord_seq)

    w = WorkingGraph.from_graph(g)
    stack = DeletionStack()
    st = BoundsState(ub_star=n)
    witness: Clique = Clique(())
    best: Coloring | None = None
    best_k = n
    time_to_best = 0.0
    trace: list[tuple[int, int, int]] = []
    it = 0

    def reduce_to(ell: int) -> None:
        if redu_rule(w, ell, stack).reduced:
            st.reduced_this_iter = True

    while elapsed() < cfg.cutoff:
        it += 1
        st.reduced_this_iter = False
        last_lb = st.lb_star
        c = find_clique_heuristic(w, rng_clq, cfg.findclq_budget, clock)
        if c.size > st.lb_star:
            st.lb_star, st.lb_source, witness = c.size, "findclq", c
        if st.lb_star > last_lb:
            reduce_to(st.lb_star)

        if st.exactlb_enabled and not w.is_empty:
            found = exact_lb_search(w, st.lb_star, cfg.exactlb_budget, cfg.size_upper, clock)
            lb_e = found.size if found is not None else st.lb_star
            if lb_e > st.lb_star:
                st.lb_star, st.lb_source, witness = lb_e, "exactlb", found
                reduce_to(st.lb_star)
            if lb_e == st.last_lb_e:
                st.exactlb_enabled = False
            st.last_lb_e = lb_e

        if w.is_empty:
            time_to_best = elapsed()
            trace.append((it, st.lb_star, st.lb_star))
            break

        if st.reduced_this_iter or st.ub_star == n:
            incumbent = best.restrict(w.alive) if best is not None else None
            f = mdd_color(w, incumbent, mdd_order(w, rng_ord, cfg.alpha, cfg.lam))
            source = "mddcolor"
        else:
            f = dsatur(w)
            source = "dsatur"
        k = f.num_colors
        if k < best_k:
            best, best_k = f, k
            st.ub_star = max(k, stack.max_ell)
            st.ub_source = source
            time_to_best = elapsed()
        trace.append((it, st.lb_star, st.ub_star))
        log.debug("iter %d lb=%d ub=%d alive=%d", it, st.lb_star, st.ub_star, w.n_alive)
        if st.ub_star <= st.lb_star:
            break

    if w.is_empty:
        partial = Coloring.empty(n)
    else:
        if best is None:
            best = dsatur(w)
        partial = best.restrict(w.alive)
    final = extend_coloring(g, partial, stack)
    num = final.num_colors

    if not verify_coloring(g, final):
        raise InvariantError("final coloring is not proper")
    if witness.size != st.lb_star or not witness.is_clique_in(g):
        raise InvariantError("lower bound is not backed by a clique")
    if num < st.lb_star:
        raise InvariantError("coloring uses fewer colors than the clique bound")

    return SolveResult(
        coloring=final,
        num_colors=num,
        lb_final=st.lb_star,
        optimal=num == st.lb_star,
        time_to_best=time_to_best,
        iterations=it,
        clique=witness.vertices,
        trace=trace,
    )


def brute_force_chromatic(g: Graph) -> int:
    """Exact chromatic number by iterative deepening; for graphs with n <= 16."""
    n = g.n
    if n > 16:
        raise ValueError("brute_force_chromatic is limited to 16 vertices")
    if n == 0:
        return 0
    nb = [0] * n
    for u, v in g.edges().tolist():
        nb[u] |= 1 << v
        nb[v] |= 1 << u

    best_clique = 0
    is_clique = [False] * (1 << n)
    is_clique[0] = True
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        if is_clique[rest] and (nb[low] & rest) == rest:
            is_clique[mask] = True
            if bin(mask).count("1") > bin(best_clique).count("1"):
                best_clique = mask

    seed = [v for v in range(n) if best_clique >> v & 1]
    others = sorted((v for v in range(n) if not best_clique >> v & 1), key=lambda v: -bin(nb[v]).count("1"))
    order = seed + others

    def colorable(k: int) -> bool:
        col = [-1] * n
        for i, v in enumerate(seed):
            col[v] = i

        def go(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            for c in range(min(k, used + 1)):
                if all(col[u] != c for u in range(n) if nb[v] >> u & 1):
                    col[v] = c
                    if go(i + 1, max(used, c + 1)):
                        return True
                    col[v] = -1
            return False

        return go(len(seed), len(seed))

    for k in range(max(1, len(seed)), n + 1):
        if colorable(k):
            return k
    return n
