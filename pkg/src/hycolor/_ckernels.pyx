# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
# distutils: language = c++
"""Compiled twins of the kernels in ``_pykernels``; results are identical."""

import numpy as np

from libc.stdint cimport int64_t, uint64_t, uint8_t
from libcpp.algorithm cimport sort
from libcpp.pair cimport pair
from libcpp.queue cimport priority_queue
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

NAME = "cython"

ctypedef pair[pair[int64_t, int64_t], int64_t] HeapItem


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


def _alive_array(g, alive):
    if alive is None:
        return np.ones(g.n, dtype=np.uint8)
    return np.ascontiguousarray(alive, dtype=np.uint8)


def core_peel(g, alive=None):
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef const uint8_t[::1] al = _alive_array(g, alive)
    cdef int64_t n = g.n
    cdef int64_t v, u, w, i, j, d, num, start, md = 0, nv = 0
    cdef int64_t du, pu, pw, dv
    cdef vector[int64_t] deg = vector[int64_t](n, 0)
    cdef vector[int64_t] pos = vector[int64_t](n, 0)
    cdef vector[int64_t] vert
    cdef vector[int64_t] bins

    for v in range(n):
        if al[v]:
            nv += 1
            d = 0
            for j in range(indptr[v], indptr[v + 1]):
                if al[indices[j]]:
                    d += 1
            deg[v] = d
            if d > md:
                md = d
    vert.resize(nv)
    bins.assign(md + 1, 0)
    for v in range(n):
        if al[v]:
            bins[deg[v]] += 1
    start = 0
    for d in range(md + 1):
        num = bins[d]
        bins[d] = start
        start += num
    for v in range(n):
        if al[v]:
            pos[v] = bins[deg[v]]
            vert[pos[v]] = v
            bins[deg[v]] += 1
    for d in range(md, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0

    for i in range(nv):
        v = vert[i]
        dv = deg[v]
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
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
    cdef int64_t[::1] sh = shell
    order = np.empty(nv, dtype=np.int64)
    cdef int64_t[::1] od = order
    for i in range(nv):
        od[i] = vert[i]
    for v in range(n):
        if al[v]:
            sh[v] = deg[v]
    return shell, order


def reduce_cascade(g, alive, degree, ell):
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef uint8_t[::1] al = alive
    cdef int64_t[::1] dg = degree
    cdef int64_t n = g.n, L = ell
    cdef int64_t v, u, j, k
    cdef vector[int64_t] cur, nxt, removed
    rounds = []
    for v in range(n):
        if al[v] and dg[v] < L:
            cur.push_back(v)
    while cur.size():
        rounds.append(<Py_ssize_t>cur.size())
        for k in range(<int64_t>cur.size()):
            v = cur[k]
            removed.push_back(v)
            al[v] = 0
        nxt.clear()
        for k in range(<int64_t>cur.size()):
            v = cur[k]
            dg[v] = 0
            for j in range(indptr[v], indptr[v + 1]):
                u = indices[j]
                if al[u]:
                    dg[u] -= 1
                    if dg[u] == L - 1:
                        nxt.push_back(u)
        sort(nxt.begin(), nxt.end())
        cur.swap(nxt)
    out = np.empty(removed.size(), dtype=np.int64)
    cdef int64_t[::1] o = out
    for k in range(<int64_t>removed.size()):
        o[k] = removed[k]
    return out, rounds


def mdd_sort(g, alive, lam10):
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef const uint8_t[::1] al = _alive_array(g, alive)
    cdef int64_t n = g.n
    cdef int64_t step = lam10 - 10
    cdef int64_t v, u, j, k, d, ptr = 0, maxkey = 0, remaining = 0, i
    cdef vector[uint8_t] placed = vector[uint8_t](n, 0)
    cdef vector[int64_t] key = vector[int64_t](n, 0)
    cdef vector[vector[int64_t]] buckets
    cdef vector[int64_t] sel, order

    for v in range(n):
        if al[v]:
            d = 0
            for j in range(indptr[v], indptr[v + 1]):
                if al[indices[j]]:
                    d += 1
            key[v] = 10 * d
            if key[v] > maxkey:
                maxkey = key[v]
        else:
            placed[v] = 1
    buckets.resize(maxkey + 1)
    for v in range(n):
        if al[v]:
            buckets[key[v]].push_back(v)
            remaining += 1
    while remaining:
        while True:
            if buckets[ptr].size():
                sel.clear()
                for i in range(<int64_t>buckets[ptr].size()):
                    v = buckets[ptr][i]
                    if not placed[v] and key[v] == ptr:
                        sel.push_back(v)
                buckets[ptr].clear()
                if sel.size():
                    break
            ptr += 1
        sort(sel.begin(), sel.end())
        for i in range(<int64_t>sel.size()):
            placed[sel[i]] = 1
            order.push_back(sel[i])
        remaining -= sel.size()
        if step:
            for i in range(<int64_t>sel.size()):
                v = sel[i]
                for j in range(indptr[v], indptr[v + 1]):
                    u = indices[j]
                    if not placed[u]:
                        k = key[u] + step
                        key[u] = k
                        buckets[k].push_back(u)
                        if k < ptr:
                            ptr = k
    out = np.empty(order.size(), dtype=np.int64)
    cdef int64_t[::1] o = out
    for i in range(<int64_t>order.size()):
        o[i] = order[i]
    return out


cdef bint _recolor(const int64_t[::1] indptr, const int64_t[::1] indices, vector[int64_t]& col,
                   int64_t v, int64_t limit, vector[int64_t]& count, vector[int64_t]& who,
                   vector[int64_t]& mark, int64_t* stamp):
    cdef int64_t j, u, c, c2, x
    for c in range(limit):
        count[c] = 0
        who[c] = -1
    for j in range(indptr[v], indptr[v + 1]):
        u = indices[j]
        c = col[u]
        if 0 <= c < limit:
            count[c] += 1
            who[c] = u
    for c in range(limit):
        if count[c] != 1:
            continue
        u = who[c]
        stamp[0] += 1
        for j in range(indptr[u], indptr[u + 1]):
            x = col[indices[j]]
            if 0 <= x < limit:
                mark[x] = stamp[0]
        for c2 in range(limit):
            if c2 != c and mark[c2] != stamp[0]:
                col[u] = c2
                col[v] = c
                return True
    return False


def greedy_color(g, order, limit):
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef const int64_t[::1] od = np.ascontiguousarray(order, dtype=np.int64)
    cdef int64_t n = g.n, L = limit
    cdef int64_t i, j, v, c, stamp = 0
    cdef vector[int64_t] col = vector[int64_t](n, -1)
    cdef vector[int64_t] seen = vector[int64_t](n + 1, -1)
    cdef vector[int64_t] count = vector[int64_t](max(L, 1), 0)
    cdef vector[int64_t] who = vector[int64_t](max(L, 1), -1)
    cdef vector[int64_t] mark = vector[int64_t](max(L, 1), 0)
    for i in range(od.shape[0] - 1, -1, -1):
        v = od[i]
        for j in range(indptr[v], indptr[v + 1]):
            c = col[indices[j]]
            if c >= 0:
                seen[c] = v
        c = 0
        while seen[c] == v:
            c += 1
        if L > 0 and c >= L:
            if _recolor(indptr, indices, col, v, L, count, who, mark, &stamp):
                continue
            return None, False
        col[v] = c
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    for i in range(n):
        o[i] = col[i]
    return out, True


def dsatur(g, alive, degree):
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef const uint8_t[::1] al = _alive_array(g, alive)
    cdef const int64_t[::1] dg = np.ascontiguousarray(degree, dtype=np.int64)
    cdef int64_t n = g.n
    cdef int64_t v, u, j, c, s, i
    cdef vector[int64_t] col = vector[int64_t](n, -1)
    cdef vector[int64_t] sat = vector[int64_t](n, 0)
    cdef vector[unordered_set[int64_t]] nbc = vector[unordered_set[int64_t]](n)
    cdef priority_queue[HeapItem] heap
    cdef HeapItem top
    for v in range(n):
        if al[v]:
            heap.push(HeapItem(pair[int64_t, int64_t](0, dg[v]), -v))
    while not heap.empty():
        top = heap.top()
        heap.pop()
        s = top.first.first
        v = -top.second
        if col[v] >= 0 or s != sat[v]:
            continue
        c = 0
        while nbc[v].count(c):
            c += 1
        col[v] = c
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if al[u] and col[u] < 0:
                if not nbc[u].count(c):
                    nbc[u].insert(c)
                    sat[u] += 1
                    heap.push(HeapItem(pair[int64_t, int64_t](sat[u], dg[u]), -u))
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    for i in range(n):
        o[i] = col[i]
    return out


def greedy_clique(g, alive, start):
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef const uint8_t[::1] al = _alive_array(g, alive)
    cdef int64_t n = g.n
    cdef int64_t s = start, u, x, j, i, k, best, bu, stamp = 0
    cdef vector[int64_t] mark = vector[int64_t](n, 0)
    cdef vector[int64_t] cand, nxt
    clique = [start]
    for j in range(indptr[s], indptr[s + 1]):
        if al[indices[j]]:
            cand.push_back(indices[j])
    while cand.size():
        stamp += 1
        for i in range(<int64_t>cand.size()):
            mark[cand[i]] = stamp
        best = -1
        bu = -1
        for i in range(<int64_t>cand.size()):
            u = cand[i]
            k = 0
            for j in range(indptr[u], indptr[u + 1]):
                if mark[indices[j]] == stamp:
                    k += 1
            if k > best:
                best = k
                bu = u
        clique.append(bu)
        nxt.clear()
        for j in range(indptr[bu], indptr[bu + 1]):
            x = indices[j]
            if mark[x] == stamp:
                nxt.push_back(x)
        cand.swap(nxt)
    return clique


cdef class _CliqueSearch:
    cdef int64_t W
    cdef vector[uint64_t] nb
    cdef vector[int64_t] order
    cdef vector[int64_t] cur
    cdef vector[uint64_t] U
    cdef vector[uint64_t] Q
    cdef int64_t size
    cdef int64_t nodes
    cdef int64_t check_every
    cdef bint stop
    cdef object should_stop
    cdef object best

    cdef int expand(self, vector[uint64_t]& P) except -1:
        cdef int64_t W = self.W
        cdef int64_t w, i, k, j, depth, lo, idx
        cdef uint64_t bit, any_u
        cdef vector[int64_t] verts
        cdef vector[int64_t] bounds
        cdef vector[uint64_t] NP

        self.nodes += 1
        if self.nodes % self.check_every == 0 and self.should_stop():
            self.stop = True
        if self.stop:
            return 0

        for w in range(W):
            self.U[w] = P[w]
        k = 0
        lo = 0
        while True:
            while lo < W and self.U[lo] == 0:
                lo += 1
            if lo == W:
                break
            k += 1
            for w in range(lo, W):
                self.Q[w] = self.U[w]
            j = lo
            while True:
                while j < W and self.Q[j] == 0:
                    j += 1
                if j == W:
                    break
                idx = j * 64 + _ctz(self.Q[j])
                bit = (<uint64_t>1) << (idx & 63)
                self.Q[j] &= ~bit
                self.U[j] &= ~bit
                for w in range(j, W):
                    self.Q[w] &= ~self.nb[idx * W + w]
                verts.push_back(idx)
                bounds.push_back(k)

        depth = self.cur.size()
        NP.resize(W)
        for j in range(<int64_t>verts.size() - 1, -1, -1):
            if depth + bounds[j] <= self.size:
                return 0
            i = verts[j]
            self.cur.push_back(i)
            any_u = 0
            for w in range(W):
                NP[w] = P[w] & self.nb[i * W + w]
                any_u |= NP[w]
            if any_u:
                self.expand(NP)
            elif depth + 1 > self.size:
                self.size = depth + 1
                self.best = [self.order[x] for x in self.cur]
            self.cur.pop_back()
            if self.stop:
                return 0
            P[i >> 6] &= ~((<uint64_t>1) << (i & 63))
        return 0


def clique_search(g, lower, initial, should_stop, check_every=1024):
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef int64_t n = g.n
    cdef int64_t W = (n + 63) // 64
    cdef int64_t i, v, j, p
    cdef _CliqueSearch s = _CliqueSearch()
    cdef vector[int64_t] pos = vector[int64_t](n, 0)
    cdef vector[uint64_t] P
    _, peel = core_peel(g, None)
    cdef const int64_t[::1] pl = peel
    s.W = W
    s.order.resize(n)
    for i in range(n):
        s.order[i] = pl[n - 1 - i]
        pos[s.order[i]] = i
    s.nb.assign(n * W, 0)
    for i in range(n):
        v = s.order[i]
        for j in range(indptr[v], indptr[v + 1]):
            p = pos[indices[j]]
            s.nb[i * W + (p >> 6)] |= (<uint64_t>1) << (p & 63)
    s.U.resize(W)
    s.Q.resize(W)
    s.best = list(initial)
    s.size = max(lower, len(initial))
    s.nodes = 0
    s.check_every = check_every
    s.stop = False
    s.should_stop = should_stop
    if n:
        P.assign(W, 0)
        for i in range(n):
            P[i >> 6] |= (<uint64_t>1) << (i & 63)
        s.expand(P)
    return s.best, not s.stop, s.nodes
