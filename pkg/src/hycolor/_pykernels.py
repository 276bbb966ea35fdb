"""Pure-Python implementations of the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and bit-identical results; ``hycolor._backend`` picks one at import time.
Kernels take a ``Graph`` and read ``g.adj`` (Python lists) here or
``g.indptr``/``g.indices`` in the compiled version.

Conventions shared by both backends:

* ``alive`` is a ``uint8`` array (or ``None`` for "all alive");
* ``degree`` is an ``int64`` array of dynamic degrees, 0 for dead vertices;
* colors are 0-based, -1 means uncolored.
"""

from __future__ import annotations

import heapq
import sys

import numpy as np

NAME = "python"


def _alive_list(g, alive):
    if alive is None:
        return [1] * g.n
    return alive.tolist()


def core_peel(g, alive=None):
    """Bucket peeling (Batagelj-Zaversnik) of the alive subgraph.

    Returns ``(shell, order)``: shell number per vertex (-1 for dead vertices)
    and the alive vertices in peel order (nondecreasing shell).
    """
    adj = g.adj
    n = g.n
    al = _alive_list(g, alive)
    verts = [v for v in range(n) if al[v]]
    deg = [0] * n
    for v in verts:
        deg[v] = sum(1 for u in adj[v] if al[u])
    md = max((deg[v] for v in verts), default=0)

    bins = [0] * (md + 1)
    for v in verts:
        bins[deg[v]] += 1
    start = 0
    for d in range(md + 1):
        num = bins[d]
        bins[d] = start
        start += num
    pos = [0] * n
    vert = [0] * len(verts)
    for v in verts:
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(md, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0

    for i in range(len(verts)):
        v = vert[i]
        dv = deg[v]
        for u in adj[v]:
            if al[u] and deg[u] > dv:
                du = deg[u]
                pu = pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u] = pw
                    vert[pu] = w
                    pos[w] = pu
                    vert[pw] = u
                bins[du] += 1
                deg[u] = du - 1

    shell = np.full(n, -1, dtype=np.int64)
    if verts:
        idx = np.asarray(verts, dtype=np.int64)
        shell[idx] = np.asarray([deg[v] for v in verts], dtype=np.int64)
    return shell, np.asarray(vert, dtype=np.int64)


def reduce_cascade(g, alive, degree, ell):
    """Delete vertices of degree < ell in rounds until none is left.

    Mutates ``alive`` and ``degree`` in place. Returns the removed vertices in
    deletion order (ascending id within a round) and the size of each round.
    """
    adj = g.adj
    al = alive.tolist()
    dg = degree.tolist()
    cur = [v for v in range(g.n) if al[v] and dg[v] < ell]
    removed = []
    rounds = []
    while cur:
        rounds.append(len(cur))
        removed.extend(cur)
        for v in cur:
            al[v] = 0
        nxt = []
        for v in cur:
            dg[v] = 0
            for u in adj[v]:
                if al[u]:
                    dg[u] -= 1
                    if dg[u] == ell - 1:
                        nxt.append(u)
        nxt.sort()
        cur = nxt
    alive[:] = al
    degree[:] = dg
    return np.asarray(removed, dtype=np.int64), rounds


def mdd_sort(g, alive, lam10):
    """Mixed-degree ordering with integer keys ``10*r + lam10*e``.

    Each round places every unplaced vertex attaining the minimum key, in
    ascending id order.
    """
    adj = g.adj
    n = g.n
    al = _alive_list(g, alive)
    placed = [not a for a in al]
    key = [0] * n
    maxkey = 0
    for v in range(n):
        if al[v]:
            k = 10 * sum(1 for u in adj[v] if al[u])
            key[v] = k
            if k > maxkey:
                maxkey = k
    buckets = [[] for _ in range(maxkey + 1)]
    remaining = 0
    for v in range(n):
        if al[v]:
            buckets[key[v]].append(v)
            remaining += 1
    step = lam10 - 10
    order = []
    ptr = 0
    while remaining:
        while True:
            b = buckets[ptr]
            if b:
                sel = [v for v in b if not placed[v] and key[v] == ptr]
                buckets[ptr] = []
                if sel:
                    break
            ptr += 1
        sel.sort()
        for v in sel:
            placed[v] = True
        order.extend(sel)
        remaining -= len(sel)
        for v in sel:
            for u in adj[v]:
                if not placed[u] and step:
                    k = key[u] + step
                    key[u] = k
                    buckets[k].append(u)
                    if k < ptr:
                        ptr = k
    return np.asarray(order, dtype=np.int64)


def _recolor(adj, col, v, limit):
    count = [0] * limit
    who = [-1] * limit
    for u in adj[v]:
        c = col[u]
        if 0 <= c < limit:
            count[c] += 1
            who[c] = u
    for c in range(limit):
        if count[c] != 1:
            continue
        u = who[c]
        forb = {col[x] for x in adj[u]}
        for c2 in range(limit):
            if c2 != c and c2 not in forb:
                col[u] = c2
                col[v] = c
                return True
    return False


def recolor(g, colors, v, limit):
    """Single-move repair on a Python list of colors; mutates on success."""
    return _recolor(g.adj, colors, v, limit)


def greedy_color(g, order, limit):
    """Color ``order`` back to front with the smallest free color.

    With ``limit > 0`` a vertex needing color ``>= limit`` triggers a recolor
    attempt; if that fails, returns ``(None, False)``.
    """
    adj = g.adj
    col = [-1] * g.n
    seen = [-1] * (g.n + 1)
    for v in reversed(order.tolist()):
        for u in adj[v]:
            c = col[u]
            if c >= 0:
                seen[c] = v
        c = 0
        while seen[c] == v:
            c += 1
        if limit > 0 and c >= limit:
            if _recolor(adj, col, v, limit):
                continue
            return None, False
        col[v] = c
    return np.asarray(col, dtype=np.int64), True


def dsatur(g, alive, degree):
    """DSatur with a lazy binary heap keyed on (saturation, degree, -id)."""
    adj = g.adj
    n = g.n
    al = _alive_list(g, alive)
    dg = degree.tolist()
    col = [-1] * n
    sat = [0] * n
    nbc = [None] * n
    heap = []
    for v in range(n):
        if al[v]:
            nbc[v] = set()
            heap.append((0, -dg[v], v))
    heapq.heapify(heap)
    while heap:
        s, d, v = heapq.heappop(heap)
        if col[v] >= 0 or -s != sat[v]:
            continue
        used = nbc[v]
        c = 0
        while c in used:
            c += 1
        col[v] = c
        for u in adj[v]:
            if al[u] and col[u] < 0:
                su = nbc[u]
                if c not in su:
                    su.add(c)
                    sat[u] += 1
                    heapq.heappush(heap, (-sat[u], -dg[u], u))
    return np.asarray(col, dtype=np.int64)


def greedy_clique(g, alive, start):
    """Grow a clique from ``start``, always adding the candidate with the most
    neighbors among the remaining candidates (lowest id on ties)."""
    adj = g.adj
    al = _alive_list(g, alive) if alive is not None else None
    clique = [start]
    if al is None:
        cand = list(adj[start])
    else:
        cand = [u for u in adj[start] if al[u]]
    while cand:
        cs = set(cand)
        best = -1
        bu = -1
        for u in cand:
            k = 0
            for x in adj[u]:
                if x in cs:
                    k += 1
            if k > best:
                best = k
                bu = u
        clique.append(bu)
        cand = [x for x in adj[bu] if x in cs]
    return clique


def clique_search(g, lower, initial, should_stop, check_every=1024):
    """Bitset branch and bound for a clique larger than ``max(lower, |initial|)``.

    Vertices are branched in reverse degeneracy order with greedy-coloring
    bounds. ``should_stop`` is polled every ``check_every`` search nodes.
    Returns ``(best, completed, nodes)`` where ``best`` is ``initial`` unless
    a larger clique was found.
    """
    n = g.n
    adj = g.adj
    _, peel = core_peel(g, None)
    order = peel.tolist()[::-1]
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    nb = [0] * n
    for i, v in enumerate(order):
        mask = 0
        for u in adj[v]:
            mask |= 1 << pos[u]
        nb[i] = mask

    state = {"best": list(initial), "size": max(lower, len(initial)), "nodes": 0, "stop": False}
    cur = []

    def expand(P):
        state["nodes"] += 1
        if state["nodes"] % check_every == 0 and should_stop():
            state["stop"] = True
        if state["stop"]:
            return
        verts = []
        bounds = []
        U = P
        k = 0
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                i = low.bit_length() - 1
                Q &= ~low
                Q &= ~nb[i]
                U &= ~low
                verts.append(i)
                bounds.append(k)
        depth = len(cur)
        for j in range(len(verts) - 1, -1, -1):
            if depth + bounds[j] <= state["size"]:
                return
            i = verts[j]
            cur.append(i)
            NP = P & nb[i]
            if NP:
                expand(NP)
            elif depth + 1 > state["size"]:
                state["size"] = depth + 1
                state["best"] = [order[x] for x in cur]
            cur.pop()
            if state["stop"]:
                return
            P &= ~(1 << i)

    if n:
        limit = sys.getrecursionlimit()
        if limit < n + 200:
            sys.setrecursionlimit(n + 200)
        try:
            expand((1 << n) - 1)
        finally:
            sys.setrecursionlimit(limit)
    return state["best"], not state["stop"], state["nodes"]
