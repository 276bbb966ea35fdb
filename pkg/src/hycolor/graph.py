"""Graph storage, instance parsing and the mutable working-graph view."""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO, Iterable, Iterator, Sequence, Union

import numpy as np

from . import _backend

Source = Union[str, bytes, os.PathLike, IO[str], IO[bytes]]

__all__ = [
    "Graph",
    "ParseStats",
    "ParseError",
    "MissingProblemLine",
    "VertexOutOfRange",
    "BadToken",
    "EmptyGraph",
    "WorkingGraph",
    "CoreDecomposition",
    "parse_dimacs",
    "parse_edgelist",
    "parse_mtx",
    "parse_graph",
    "load_graph",
    "to_dimacs",
    "core_decompose",
    "remove_vertices",
]


class ParseError(ValueError):
    """Malformed instance file. ``lineno`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class MissingProblemLine(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class BadToken(ParseError):
    pass


class EmptyGraph(ParseError):
    pass


@dataclass(frozen=True)
class ParseStats:
    duplicates: int = 0
    self_loops: int = 0


class Graph:
    """Immutable undirected simple graph in CSR form.

    ``indices[indptr[v]:indptr[v+1]]`` is the strictly ascending neighbor list
    of ``v``. ``labels`` optionally maps internal ids to external vertex ids.
    """

    def __init__(
        self,
        n: int,
        indptr: np.ndarray,
        indices: np.ndarray,
        labels: np.ndarray | None = None,
        stats: ParseStats | None = None,
        name: str = "",
    ):
        self.n = int(n)
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices, dtype=np.int64)
        self.m = len(self.indices) // 2
        self.labels = None if labels is None else np.asarray(labels, dtype=np.int64)
        self.stats = stats or ParseStats()
        self.name = name
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]] | np.ndarray,
        labels: np.ndarray | None = None,
        name: str = "",
    ) -> "Graph":
        """Build from 0-based endpoint pairs; duplicates and self-loops are dropped."""
        e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if len(e) and (e.min() < 0 or e.max() >= n):
            raise ValueError("edge endpoint out of range")
        loops = e[:, 0] == e[:, 1]
        n_loops = int(loops.sum())
        e = e[~loops]
        e = np.sort(e, axis=1)
        total = len(e)
        if total:
            e = np.unique(e, axis=0)
        dups = total - len(e)
        src = np.concatenate([e[:, 0], e[:, 1]])
        dst = np.concatenate([e[:, 1], e[:, 0]])
        perm = np.lexsort((dst, src))
        src = src[perm]
        dst = dst[perm]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n, indptr, dst, labels, ParseStats(dups, n_loops), name)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]], name: str = "") -> "Graph":
        edges = [(u, v) for u, nbrs in enumerate(adj) for v in nbrs]
        return cls.from_edges(len(adj), edges, name=name)

    @cached_property
    def adj(self) -> list[list[int]]:
        """Neighbor lists as Python lists (used by the pure-Python kernels)."""
        if self.n == 0:
            return []
        return [a.tolist() for a in np.split(self.indices, self.indptr[1:-1])]

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def edges(self) -> np.ndarray:
        """Each undirected edge once as ``(u, v)`` with ``u < v``, sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        keep = src < self.indices
        return np.column_stack([src[keep], self.indices[keep]])

    def label(self, v: int) -> int:
        return int(self.labels[v]) if self.labels is not None else v + 1

    def external_labels(self) -> np.ndarray:
        if self.labels is not None:
            return self.labels
        return np.arange(1, self.n + 1, dtype=np.int64)

    def subgraph(self, vertices: Sequence[int] | np.ndarray) -> "Graph":
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``. ``vertices``
        must be sorted ascending so adjacency stays sorted."""
        verts = np.asarray(vertices, dtype=np.int64)
        k = len(verts)
        remap = np.full(self.n, -1, dtype=np.int64)
        remap[verts] = np.arange(k, dtype=np.int64)
        if k == 0:
            return Graph(0, np.zeros(1, dtype=np.int64), np.zeros(0, dtype=np.int64))
        starts = self.indptr[verts]
        ends = self.indptr[verts + 1]
        lens = ends - starts
        src = np.repeat(np.arange(k, dtype=np.int64), lens)
        idx = np.concatenate([np.arange(s, e) for s, e in zip(starts.tolist(), ends.tolist())])
        dst = remap[self.indices[idx]]
        keep = dst >= 0
        src = src[keep]
        dst = dst[keep]
        indptr = np.zeros(k + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=k), out=indptr[1:])
        return Graph(k, indptr, dst)

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.m}>"


def _read_text(src: Source) -> str:
    if isinstance(src, bytes):
        return src.decode()
    if isinstance(src, str):
        return src
    if isinstance(src, os.PathLike):
        with open(src, "rb") as fh:
            return fh.read().decode()
    data = src.read()
    return data.decode() if isinstance(data, bytes) else data


def _tokens(text: str, comments: tuple[str, ...]) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(io.StringIO(text), start=1):
        toks = line.split()
        if not toks or toks[0][0] in comments:
            continue
        yield lineno, toks


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise BadToken(f"expected an integer, got {tok!r}", lineno) from None


def parse_dimacs(src: Source, name: str = "") -> Graph:
    """Parse a DIMACS ``.col`` instance (``p edge n m`` header, 1-based ``e u v``)."""
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, toks in _tokens(_read_text(src), ("c", "%")):
        head = toks[0]
        if head == "p":
            if n is not None:
                raise BadToken("duplicate problem line", lineno)
            if len(toks) != 4:
                raise BadToken("problem line must be 'p edge <n> <m>'", lineno)
            n = _int(toks[2], lineno)
            _int(toks[3], lineno)
            if n < 0:
                raise BadToken("negative vertex count", lineno)
        elif head == "e":
            if n is None:
                raise MissingProblemLine("edge line before problem line", lineno)
            if len(toks) != 3:
                raise BadToken("edge line must be 'e <u> <v>'", lineno)
            u = _int(toks[1], lineno)
            v = _int(toks[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRange(f"vertex index outside 1..{n}", lineno)
            edges.append((u - 1, v - 1))
        elif n is None:
            raise MissingProblemLine(f"unexpected {head!r} before problem line", lineno)
        else:
            raise BadToken(f"unknown line type {head!r}", lineno)
    if n is None:
        raise MissingProblemLine("no problem line")
    return Graph.from_edges(n, np.asarray(edges, dtype=np.int64).reshape(-1, 2), name=name)


def parse_edgelist(src: Source, name: str = "") -> Graph:
    """Parse whitespace-separated ``u v`` pairs; ids are remapped densely in
    ascending order and kept as labels."""
    pairs: list[tuple[int, int]] = []
    for lineno, toks in _tokens(_read_text(src), ("#", "%")):
        if len(toks) != 2:
            raise BadToken("expected two integers", lineno)
        u = _int(toks[0], lineno)
        v = _int(toks[1], lineno)
        if u < 0 or v < 0:
            raise BadToken("vertex ids must be non-negative", lineno)
        pairs.append((u, v))
    if not pairs:
        raise EmptyGraph("no edges")
    raw = np.asarray(pairs, dtype=np.int64)
    labels, inv = np.unique(raw, return_inverse=True)
    return Graph.from_edges(len(labels), inv.reshape(-1, 2), labels=labels, name=name)


def parse_mtx(src: Source, name: str = "") -> Graph:
    """Parse a Matrix Market coordinate file as an undirected graph.

    The first non-comment line gives ``rows cols entries``; each entry line is
    ``i j`` with an optional value, 1-based. Values are ignored.
    """
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, toks in _tokens(_read_text(src), ("%",)):
        if n is None:
            if len(toks) != 3:
                raise MissingProblemLine("expected a 'rows cols entries' size line", lineno)
            rows, cols = _int(toks[0], lineno), _int(toks[1], lineno)
            _int(toks[2], lineno)
            if rows != cols or rows < 0:
                raise BadToken("adjacency matrix must be square", lineno)
            n = rows
            continue
        if len(toks) not in (2, 3):
            raise BadToken("entry line must be 'i j [value]'", lineno)
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexOutOfRange(f"vertex index outside 1..{n}", lineno)
        edges.append((u - 1, v - 1))
    if n is None:
        raise MissingProblemLine("no size line")
    return Graph.from_edges(n, np.asarray(edges, dtype=np.int64).reshape(-1, 2), name=name)


FORMATS = ("dimacs", "edgelist", "mtx", "auto")


def parse_graph(src: Source, fmt: str = "auto", name: str = "") -> Graph:
    """Parse with an explicit format or sniff it: a ``%%MatrixMarket`` banner
    means Matrix Market, a first token ``p`` means DIMACS, else an edge list."""
    text = _read_text(src)
    if fmt == "auto":
        fmt = "edgelist"
        if text.lstrip().startswith("%%MatrixMarket"):
            fmt = "mtx"
        else:
            for _, toks in _tokens(text, ("c", "#", "%")):
                if toks[0] == "p":
                    fmt = "dimacs"
                break
    if fmt == "dimacs":
        return parse_dimacs(text, name)
    if fmt == "edgelist":
        return parse_edgelist(text, name)
    if fmt == "mtx":
        return parse_mtx(text, name)
    raise ValueError(f"unknown format {fmt!r}")


def load_graph(path: str | os.PathLike, fmt: str = "auto") -> Graph:
    with open(path, "rb") as fh:
        data = fh.read()
    return parse_graph(data, fmt, name=os.path.basename(os.fspath(path)))


def to_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges().tolist())
    return "\n".join(out) + "\n"


@dataclass
class WorkingGraph:
    """Induced subgraph of ``base`` on the alive vertices, with dynamic degrees."""

    base: Graph
    alive: np.ndarray
    degree: np.ndarray
    n_alive: int = field(default=0)

    @classmethod
    def from_graph(cls, g: Graph) -> "WorkingGraph":
        return cls(g, np.ones(g.n, dtype=np.uint8), g.degrees.astype(np.int64), g.n)

    def copy(self) -> "WorkingGraph":
        return WorkingGraph(self.base, self.alive.copy(), self.degree.copy(), self.n_alive)

    @property
    def is_empty(self) -> bool:
        return self.n_alive == 0

    def vertices(self) -> np.ndarray:
        return np.flatnonzero(self.alive)

    def alive_neighbors(self, v: int) -> np.ndarray:
        nb = self.base.neighbors(v)
        return nb[self.alive[nb].astype(bool)]

    def induced(self) -> tuple[Graph, np.ndarray]:
        """The alive subgraph as a standalone Graph plus its vertex map."""
        verts = self.vertices()
        return self.base.subgraph(verts), verts

    def remove(self, vertices: Iterable[int]) -> "WorkingGraph":
        return remove_vertices(self, vertices)


def remove_vertices(w: WorkingGraph, vertices: Iterable[int]) -> WorkingGraph:
    """Kill ``vertices`` (all must be alive) and decrement neighbor degrees."""
    vs = np.unique(np.asarray(list(vertices), dtype=np.int64))
    if len(vs) == 0:
        return w
    if not w.alive[vs].all():
        dead = vs[~w.alive[vs].astype(bool)]
        raise ValueError(f"vertex {int(dead[0])} is not alive")
    g = w.base
    w.alive[vs] = 0
    w.degree[vs] = 0
    nbrs = np.concatenate([g.neighbors(int(v)) for v in vs])
    nbrs = nbrs[w.alive[nbrs].astype(bool)]
    np.subtract.at(w.degree, nbrs, 1)
    w.n_alive -= len(vs)
    return w


@dataclass(frozen=True)
class CoreDecomposition:
    shell: np.ndarray
    peel_order: np.ndarray

    @property
    def degeneracy(self) -> int:
        return int(self.shell.max()) if len(self.peel_order) else 0

    def layer_boundaries(self) -> np.ndarray:
        """Start offsets of each shell layer within ``peel_order``, plus the end."""
        s = self.shell[self.peel_order]
        cuts = np.flatnonzero(np.diff(s)) + 1
        return np.concatenate([[0], cuts, [len(s)]]).astype(np.int64)


def core_decompose(g: Graph | WorkingGraph) -> CoreDecomposition:
    """Shell numbers by linear-time bucket peeling.

    For a WorkingGraph only alive vertices are peeled; dead ones get shell -1.
    """
    if isinstance(g, WorkingGraph):
        shell, order = _backend.kernels.core_peel(g.base, g.alive)
    else:
        shell, order = _backend.kernels.core_peel(g, None)
    return CoreDecomposition(shell, order)
