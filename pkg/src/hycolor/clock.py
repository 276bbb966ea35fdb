"""Time sources for budgets.

``RealClock`` reads wall time. ``TickClock`` makes a run reproducible: every
reading advances a counter by a fixed quantum, so budgets are spent in
deterministic units of work instead of seconds.
"""

from __future__ import annotations

import time


class RealClock:
    deterministic = False

    def __init__(self) -> None:
        self._t0 = time.perf_counter()

    def now(self) -> float:
        return time.perf_counter() - self._t0


class TickClock:
    deterministic = True

    def __init__(self, quantum: float = 1e-3) -> None:
        if quantum <= 0:
            raise ValueError("quantum must be positive")
        self.quantum = quantum
        self.ticks = 0

    def now(self) -> float:
        self.ticks += 1
        return self.ticks * self.quantum


class Deadline:
    def __init__(self, clock, budget: float) -> None:
        self.clock = clock
        self.end = clock.now() + budget

    def expired(self) -> bool:
        return self.clock.now() >= self.end

    def remaining(self) -> float:
        return max(0.0, self.end - self.clock.now())
