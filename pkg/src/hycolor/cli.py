"""Command-line front end: ``hycolor solve`` and ``hycolor bench``.

Exit codes: 0 success, 2 bad input (unreadable/malformed file, bad flag),
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import _backend
from .coloring import Coloring
from .graph import FORMATS, Graph, ParseError, load_graph
from .solver import InvariantError, SolverConfig, solve

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3

CSV_COLUMNS = ["instance", "n", "m", "min", "avg", "optimal_any", "avg_time_to_best", "status"]
TIMING_COLUMNS = {"avg_time_to_best"}


def write_solution(c: Coloring, labels: Sequence[int] | np.ndarray, path: str | os.PathLike) -> None:
    """``k <colors>`` then ``v <label> <color>`` per vertex, 1-based colors,
    ascending label order."""
    labels = np.asarray(labels)
    order = np.argsort(labels, kind="stable")
    lines = [f"k {c.num_colors}"]
    a = c.assign
    lines.extend(f"v {int(labels[i])} {int(a[i]) + 1}" for i in order)
    Path(path).write_text("\n".join(lines) + "\n")


def read_solution(path: str | os.PathLike, g: Graph) -> Coloring:
    """Map a solution file back onto ``g``'s internal ids (0-based colors)."""
    index = {int(lab): i for i, lab in enumerate(g.external_labels().tolist())}
    a = np.full(g.n, -1, dtype=np.int64)
    for line in Path(path).read_text().splitlines():
        toks = line.split()
        if toks and toks[0] == "v":
            a[index[int(toks[1])]] = int(toks[2]) - 1
    return Coloring(a)


@dataclass
class SeedRecord:
    seed: int
    num_colors: int
    lb_final: int
    optimal: bool
    time_to_best: float


@dataclass
class RunReport:
    instance: str
    n: int = 0
    m: int = 0
    records: list[SeedRecord] = field(default_factory=list)
    error: str = ""

    @property
    def min_colors(self) -> int:
        return min(r.num_colors for r in self.records)

    @property
    def avg_colors(self) -> float:
        return round(sum(r.num_colors for r in self.records) / len(self.records), 1)

    @property
    def any_optimal(self) -> bool:
        return any(r.optimal for r in self.records)

    @property
    def avg_time_to_best(self) -> float:
        return sum(r.time_to_best for r in self.records) / len(self.records)

    def row(self) -> dict[str, str]:
        if self.error or not self.records:
            return {
                "instance": self.instance, "n": str(self.n), "m": str(self.m), "min": "", "avg": "",
                "optimal_any": "", "avg_time_to_best": "", "status": self.error or "no runs",
            }
        return {
            "instance": self.instance,
            "n": str(self.n),
            "m": str(self.m),
            "min": str(self.min_colors),
            "avg": f"{self.avg_colors:.1f}",
            "optimal_any": "true" if self.any_optimal else "false",
            "avg_time_to_best": f"{self.avg_time_to_best:.3f}",
            "status": "ok",
        }

    def table_cell(self) -> str:
        """``Min(Avg)`` with ``*`` when optimality was proved."""
        star = "*" if self.any_optimal else ""
        return f"{self.min_colors}{star}({self.avg_colors:g})"


def instance_name(path: str | os.PathLike) -> str:
    stem = Path(path).name
    for ext in (".col", ".txt", ".edges", ".el", ".mtx", ".clq"):
        if stem.endswith(ext):
            stem = stem[: -len(ext)]
            break
    return re.sub(r"[^A-Za-z0-9._-]", "_", stem)


def run_instance(path: str, seeds: Sequence[int], cfg_kwargs: dict, fmt: str = "auto") -> RunReport:
    rep = RunReport(instance_name(path))
    try:
        g = load_graph(path, fmt)
    except (OSError, ParseError, UnicodeDecodeError) as exc:
        rep.error = _csv_safe(f"load error: {exc}")
        return rep
    rep.n, rep.m = g.n, g.m
    try:
        for s in seeds:
            res = solve(g, SolverConfig(seed=s, **cfg_kwargs))
            rep.records.append(SeedRecord(s, res.num_colors, res.lb_final, res.optimal, res.time_to_best))
    except Exception as exc:  # recorded per instance; the bench keeps going
        rep.error = _csv_safe(f"{type(exc).__name__}: {exc}")
    return rep


def _csv_safe(s: str) -> str:
    return re.sub(r"[^A-Za-z0-9._:= -]", "_", s)[:200]


def list_instances(spec: str | os.PathLike) -> list[str]:
    """A directory (every regular non-hidden file) or a manifest (one path per
    line, ``#`` comments, relative to the manifest)."""
    p = Path(spec)
    if p.is_dir():
        return sorted(str(f) for f in p.iterdir() if f.is_file() and not f.name.startswith("."))
    if p.is_file():
        out = []
        for line in p.read_text().splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                q = Path(line)
                out.append(str(q if q.is_absolute() else p.parent / q))
        return out
    raise FileNotFoundError(f"no such instance directory or manifest: {spec}")


def run_bench(
    paths: Sequence[str], seeds: Sequence[int], cfg_kwargs: dict, jobs: int = 1, fmt: str = "auto"
) -> list[RunReport]:
    if jobs <= 1 or len(paths) <= 1:
        return [run_instance(p, seeds, cfg_kwargs, fmt) for p in paths]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_instance, p, list(seeds), cfg_kwargs, fmt) for p in paths]
        return [f.result() for f in futures]


def write_csv(reports: Sequence[RunReport], path: str | os.PathLike) -> None:
    with open(path, "w", newline="") as fh:
        wr = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        wr.writeheader()
        for r in reports:
            wr.writerow(r.row())


def write_runs_csv(reports: Sequence[RunReport], path: str | os.PathLike) -> None:
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh, lineterminator="\n")
        wr.writerow(["instance", "seed", "num_colors", "lb_final", "optimal", "time_to_best"])
        for r in reports:
            for s in r.records:
                wr.writerow([r.instance, s.seed, s.num_colors, s.lb_final, str(s.optimal).lower(), f"{s.time_to_best:.3f}"])


def format_table(reports: Sequence[RunReport]) -> str:
    rows = [["instance", "n", "m", "Min(Avg)", "time"]]
    for r in reports:
        if r.error or not r.records:
            rows.append([r.instance, str(r.n), str(r.m), "-", r.error or "no runs"])
        else:
            rows.append([r.instance, str(r.n), str(r.m), r.table_cell(), f"{r.avg_time_to_best:.2f}"])
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows)


def _positive_float(s: str) -> float:
    try:
        x = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {s}")
    return x


def _positive_int(s: str) -> int:
    try:
        x = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if x < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {s}")
    return x


def _unit_float(s: str) -> float:
    try:
        x = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not 0 <= x <= 1:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1]: {s}")
    return x


def _seed_range(s: str) -> list[int]:
    try:
        if ".." in s:
            a, b = s.split("..", 1)
            seeds = list(range(int(a), int(b) + 1))
        else:
            seeds = [int(x) for x in s.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"seeds must look like 1..10 or 1,2,3: {s!r}") from None
    if not seeds:
        raise argparse.ArgumentTypeError("empty seed range")
    return seeds


def _add_solver_flags(p: argparse.ArgumentParser, cutoff: float) -> None:
    p.add_argument("--format", choices=list(FORMATS), default="auto")
    p.add_argument("--cutoff", type=_positive_float, default=cutoff, help="wall-clock budget per run (s)")
    p.add_argument("--alpha", type=_unit_float, default=0.2, help="layer reorder probability")
    p.add_argument("--lambda", dest="lam", type=_unit_float, default=0.7, help="mixed-degree weight (multiple of 0.1)")
    p.add_argument("--exactlb-budget", type=_positive_float, default=1.0, help="per-call exact clique budget (s)")
    p.add_argument("--size-upper", type=_positive_int, default=1000, help="test-set size cap")
    p.add_argument("--findclq-budget", type=_positive_float, default=0.05, help="per-call greedy clique budget (s)")
    p.add_argument("--deterministic", action="store_true", help="count work ticks instead of reading the wall clock")
    p.add_argument("--tick", type=_positive_float, default=1e-3, help="seconds per tick in deterministic mode")


def _cfg_kwargs(args) -> dict:
    return dict(
        cutoff=args.cutoff,
        alpha=args.alpha,
        lam=args.lam,
        exactlb_budget=args.exactlb_budget,
        size_upper=args.size_upper,
        findclq_budget=args.findclq_budget,
        deterministic=args.deterministic,
        tick=args.tick,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hycolor",
        description="Graph coloring with clique bounds, low-degree reduction and core-ordered greedy coloring.",
        epilog="exit codes: 0 ok, 2 bad input or flag, 3 internal invariant violation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="color one instance")
    ps.add_argument("file")
    _add_solver_flags(ps, cutoff=60.0)
    ps.add_argument("--seed", type=int, default=1)
    ps.add_argument("--output", help="write the solution file here")
    ps.add_argument("--json", action="store_true", help="print a JSON summary instead of the 's' line")

    pb = sub.add_parser("bench", help="run seeds over a set of instances and report Min(Avg)")
    pb.add_argument("--instances", required=True, help="directory or manifest file")
    pb.add_argument("--seeds", type=_seed_range, default=list(range(1, 11)), help="e.g. 1..10")
    _add_solver_flags(pb, cutoff=60.0)
    pb.add_argument("--out", help="CSV report path")
    pb.add_argument("--runs", help="per-seed CSV path")
    pb.add_argument("--jobs", type=_positive_int, default=1)
    return parser


def cmd_solve(args) -> int:
    try:
        g = load_graph(args.file, args.format)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ParseError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if g.stats.duplicates or g.stats.self_loops:
        print(f"c dropped {g.stats.duplicates} duplicate edges, {g.stats.self_loops} self-loops", file=sys.stderr)
    try:
        cfg = SolverConfig(seed=args.seed, **_cfg_kwargs(args))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        res = solve(g, cfg)
    except InvariantError as exc:
        print(f"error: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if args.json:
        print(json.dumps({
            "instance": g.name, "n": g.n, "m": g.m, "num_colors": res.num_colors, "lb": res.lb_final,
            "optimal": res.optimal, "time_to_best": res.time_to_best, "iterations": res.iterations,
            "seed": args.seed, "backend": _backend.BACKEND,
        }))
    else:
        print(res.summary())
    if args.output:
        try:
            write_solution(res.coloring, g.external_labels(), args.output)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_INPUT
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        paths = list_instances(args.instances)
    except (OSError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    kwargs = _cfg_kwargs(args)
    try:
        SolverConfig(**kwargs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    reports = run_bench(paths, args.seeds, kwargs, args.jobs, args.format)
    print(format_table(reports))
    if args.out:
        write_csv(reports, args.out)
    if args.runs:
        write_runs_csv(reports, args.runs)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "solve":
        return cmd_solve(args)
    return cmd_bench(args)


if __name__ == "__main__":
    sys.exit(main())
