# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: link clique screening and exact multiway max-cut.

Mirror of daisy._purecore with identical outputs; only the representation
differs (C word arrays instead of Python int bitsets).
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

import numpy as np

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(u64) nogil


def color_suspects_r3(tri_arr, int n, int k, int v_lo=0, v_hi=None):
    """Vertices of a 3-graph whose link might contain a k-clique.

    Greedy-colors each vertex link in ascending vertex order; a link that
    gets by with at most k-1 colors is certified K_k-free and filtered
    out.  Exact clique search on the survivors is the caller's job.
    """
    if k < 2:
        raise ValueError("clique size must be at least 2")
    tri_np = np.ascontiguousarray(tri_arr, dtype=np.int32)
    cdef int[:, ::1] tri = tri_np
    cdef Py_ssize_t m = tri.shape[0]
    cdef int hi = n if v_hi is None else <int> v_hi
    cdef int lo = v_lo
    if m == 0 or n == 0 or lo >= hi:
        return np.empty(0, dtype=np.int32)
    cdef int W = (n + 63) >> 6
    cdef int ncls = k - 1
    cdef Py_ssize_t i
    cdef int a, b, c, v, u, x, y, col, j, bad, nonempty
    cdef long long e

    off_np = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] off = off_np
    for i in range(m):
        off[tri[i, 0] + 1] += 1
        off[tri[i, 1] + 1] += 1
        off[tri[i, 2] + 1] += 1
    for v in range(n):
        off[v + 1] += off[v]
    cur_np = off_np[:n].copy()
    cdef long long[::1] cur = cur_np
    inc_np = np.empty(3 * m, dtype=np.int64)
    cdef long long[::1] inc = inc_np
    for i in range(m):
        inc[cur[tri[i, 0]]] = i
        cur[tri[i, 0]] += 1
        inc[cur[tri[i, 1]]] = i
        cur[tri[i, 1]] += 1
        inc[cur[tri[i, 2]]] = i
        cur[tri[i, 2]] += 1

    rows_np = np.zeros((n, W), dtype=np.uint64)
    cdef u64[:, ::1] rows = rows_np
    cls_np = np.zeros((ncls, W), dtype=np.uint64)
    cdef u64[:, ::1] cls = cls_np
    cdef u64 conflict
    suspects = []
    for v in range(lo, hi):
        if off[v + 1] == off[v]:
            continue
        memset(&rows[0, 0], 0, n * W * sizeof(u64))
        for i in range(off[v], off[v + 1]):
            e = inc[i]
            a = tri[e, 0]
            b = tri[e, 1]
            c = tri[e, 2]
            if a == v:
                x = b
                y = c
            elif b == v:
                x = a
                y = c
            else:
                x = a
                y = b
            rows[x, y >> 6] |= (<u64> 1) << (y & 63)
            rows[y, x >> 6] |= (<u64> 1) << (x & 63)
        memset(&cls[0, 0], 0, ncls * W * sizeof(u64))
        bad = 0
        for u in range(n):
            nonempty = 0
            for j in range(W):
                if rows[u, j] != 0:
                    nonempty = 1
                    break
            if not nonempty:
                continue
            col = -1
            for x in range(ncls):
                conflict = 0
                for j in range(W):
                    conflict |= cls[x, j] & rows[u, j]
                if conflict == 0:
                    col = x
                    break
            if col < 0:
                bad = 1
                break
            cls[col, u >> 6] |= (<u64> 1) << (u & 63)
        if bad:
            suspects.append(v)
    return np.asarray(suspects, dtype=np.int32)


def link_rows_r3(tri_arr, int n, int v):
    """Bitset adjacency of the link of v, as an (n, ceil(n/64)) uint64 array."""
    tri_np = np.ascontiguousarray(tri_arr, dtype=np.int32)
    cdef int[:, ::1] tri = tri_np
    cdef Py_ssize_t m = tri.shape[0]
    cdef Py_ssize_t i
    cdef int W = (n + 63) >> 6
    if W < 1:
        W = 1
    rows_np = np.zeros((n, W), dtype=np.uint64)
    cdef u64[:, ::1] rows = rows_np
    cdef int a, b, c, x, y
    for i in range(m):
        a = tri[i, 0]
        b = tri[i, 1]
        c = tri[i, 2]
        if a == v:
            x = b
            y = c
        elif b == v:
            x = a
            y = c
        elif c == v:
            x = a
            y = b
        else:
            continue
        rows[x, y >> 6] |= (<u64> 1) << (y & 63)
        rows[y, x >> 6] |= (<u64> 1) << (x & 63)
    return rows_np


cdef struct CanonCtx:
    int n
    int r
    int k
    int *ev            # k * r edge vertices, rows ascending
    long long *ioff    # n + 1 CSR offsets
    int *ilist         # r * k incident edge indices
    int *cnt           # assigned-vertex count per edge
    int *new_of_old    # relabeling under construction, -1 = unassigned
    long long *ref     # reference word (sorted colex codes)
    long long *seg     # scratch for the segment completed at one position
    int found_smaller


cdef int _canon_dfs(CanonCtx *ctx, int p, int wi):
    cdef int u, i, j, e, slen, idx, verdict, pos
    cdef long long acc, lab
    cdef long long labels[16]
    if wi == ctx.k or p == ctx.n:
        return 0
    for u in range(ctx.n):
        if ctx.new_of_old[u] >= 0:
            continue
        ctx.new_of_old[u] = p
        slen = 0
        for i in range(ctx.ioff[u], ctx.ioff[u + 1]):
            e = ctx.ilist[i]
            ctx.cnt[e] += 1
            if ctx.cnt[e] == ctx.r:
                for j in range(ctx.r):
                    labels[j] = ctx.new_of_old[ctx.ev[e * ctx.r + j]]
                for j in range(1, ctx.r):
                    lab = labels[j]
                    pos = j
                    while pos > 0 and labels[pos - 1] > lab:
                        labels[pos] = labels[pos - 1]
                        pos -= 1
                    labels[pos] = lab
                acc = 0
                for j in range(ctx.r - 1, -1, -1):
                    acc = acc * ctx.n + labels[j]
                pos = slen
                while pos > 0 and ctx.seg[pos - 1] > acc:
                    ctx.seg[pos] = ctx.seg[pos - 1]
                    pos -= 1
                ctx.seg[pos] = acc
                slen += 1
        verdict = 0
        for idx in range(slen):
            if ctx.seg[idx] != ctx.ref[wi + idx]:
                verdict = -1 if ctx.seg[idx] < ctx.ref[wi + idx] else 1
                break
        if verdict < 0:
            ctx.found_smaller = 1
        elif verdict == 0:
            _canon_dfs(ctx, p + 1, wi + slen)
        for i in range(ctx.ioff[u], ctx.ioff[u + 1]):
            ctx.cnt[ctx.ilist[i]] -= 1
        ctx.new_of_old[u] = -1
        if ctx.found_smaller:
            return 1
    return 0


def is_min_labeled_arr(edges_arr, int n, int r, ref_arr) -> bool:
    """Array-interface minimum-word canonicity check.

    True iff no vertex relabeling gives a strictly smaller sorted colex
    edge word than ``ref_arr`` (which must be the word of ``edges_arr``
    under the identity labeling).
    """
    if r > 16:
        raise ValueError("uniformity over 16 not supported")
    edges_np = np.ascontiguousarray(np.asarray(edges_arr, dtype=np.int32).reshape(-1, r))
    cdef int[:, ::1] ev = edges_np
    cdef int k = <int> ev.shape[0]
    if k == 0:
        return True
    ref_np = np.ascontiguousarray(ref_arr, dtype=np.int64)
    cdef long long[::1] ref = ref_np

    cdef CanonCtx ctx
    ctx.n = n
    ctx.r = r
    ctx.k = k
    ctx.ev = &ev[0, 0]
    ctx.ref = &ref[0]
    ctx.ioff = <long long *> malloc((n + 1) * sizeof(long long))
    ctx.ilist = <int *> malloc(r * k * sizeof(int))
    ctx.cnt = <int *> malloc(k * sizeof(int))
    ctx.new_of_old = <int *> malloc(n * sizeof(int))
    ctx.seg = <long long *> malloc(k * sizeof(long long))
    if (ctx.ioff == NULL or ctx.ilist == NULL or ctx.cnt == NULL
            or ctx.new_of_old == NULL or ctx.seg == NULL):
        free(ctx.ioff)
        free(ctx.ilist)
        free(ctx.cnt)
        free(ctx.new_of_old)
        free(ctx.seg)
        raise MemoryError()
    cdef int i, j, v
    cdef long long *cur
    memset(ctx.ioff, 0, (n + 1) * sizeof(long long))
    for i in range(k):
        ctx.cnt[i] = 0
        for j in range(r):
            ctx.ioff[ev[i, j] + 1] += 1
    for v in range(n):
        ctx.ioff[v + 1] += ctx.ioff[v]
        ctx.new_of_old[v] = -1
    cur = <long long *> malloc(n * sizeof(long long))
    if cur == NULL:
        free(ctx.ioff)
        free(ctx.ilist)
        free(ctx.cnt)
        free(ctx.new_of_old)
        free(ctx.seg)
        raise MemoryError()
    for v in range(n):
        cur[v] = ctx.ioff[v]
    for i in range(k):
        for j in range(r):
            v = ev[i, j]
            ctx.ilist[cur[v]] = i
            cur[v] += 1
    free(cur)
    ctx.found_smaller = 0

    _canon_dfs(&ctx, 0, 0)

    out = ctx.found_smaller == 0
    free(ctx.ioff)
    free(ctx.ilist)
    free(ctx.cnt)
    free(ctx.new_of_old)
    free(ctx.seg)
    return out


cdef struct CutCtx:
    int nv
    int t
    int W
    u64 *rows
    u64 *parts
    u64 *assigned
    long long m_total
    long long best
    signed char *assign
    signed char *best_assign
    long long nodes
    long long node_cap
    int aborted


cdef void _cut_dfs(CutCtx *ctx, int v, long long cross, long long inside, int used):
    cdef int W = ctx.W
    cdef int c, j, cmax
    cdef long long adj_assigned, in_gain
    cdef u64 *row
    if ctx.aborted:
        return
    ctx.nodes += 1
    if ctx.nodes > ctx.node_cap:
        ctx.aborted = 1
        return
    if v == ctx.nv:
        if cross > ctx.best:
            ctx.best = cross
            for j in range(ctx.nv):
                ctx.best_assign[j] = ctx.assign[j]
        return
    if ctx.m_total - inside <= ctx.best:
        return
    row = ctx.rows + v * W
    adj_assigned = 0
    for j in range(W):
        adj_assigned += __builtin_popcountll(row[j] & ctx.assigned[j])
    cmax = used + 1
    if cmax > ctx.t:
        cmax = ctx.t
    for c in range(cmax):
        in_gain = 0
        for j in range(W):
            in_gain += __builtin_popcountll(row[j] & ctx.parts[c * W + j])
        ctx.assign[v] = c
        ctx.parts[c * W + (v >> 6)] |= (<u64> 1) << (v & 63)
        ctx.assigned[v >> 6] |= (<u64> 1) << (v & 63)
        _cut_dfs(ctx, v + 1, cross + adj_assigned - in_gain, inside + in_gain,
                 used + (1 if c == used else 0))
        ctx.parts[c * W + (v >> 6)] &= ~((<u64> 1) << (v & 63))
        ctx.assigned[v >> 6] &= ~((<u64> 1) << (v & 63))
        ctx.assign[v] = -1
        if ctx.aborted:
            return


def max_cut_exact(words_arr, int nv, int t, long long node_cap):
    """Exact maximum t-way cut by branch and bound.

    Vertices are assigned parts in ascending order; part indices are
    introduced in first-use order, which both breaks the part-relabeling
    symmetry and makes the first maximum found the lexicographically
    least assignment vector.  Returns (cut, assignment, nodes, complete).
    """
    if nv == 0:
        return 0, np.empty(0, dtype=np.int8), 1, True
    words_np = np.ascontiguousarray(words_arr, dtype=np.uint64)
    cdef u64[:, ::1] words = words_np
    cdef int W = <int> words.shape[1]
    cdef int i, j
    cdef long long m_total = 0
    for i in range(nv):
        for j in range(W):
            m_total += __builtin_popcountll(words[i, j])
    m_total //= 2

    cdef CutCtx ctx
    ctx.nv = nv
    ctx.t = t
    ctx.W = W
    ctx.rows = &words[0, 0]
    ctx.parts = <u64 *> malloc(t * W * sizeof(u64))
    ctx.assigned = <u64 *> malloc(W * sizeof(u64))
    ctx.assign = <signed char *> malloc(nv)
    ctx.best_assign = <signed char *> malloc(nv)
    if ctx.parts == NULL or ctx.assigned == NULL or ctx.assign == NULL or ctx.best_assign == NULL:
        free(ctx.parts)
        free(ctx.assigned)
        free(ctx.assign)
        free(ctx.best_assign)
        raise MemoryError()
    memset(ctx.parts, 0, t * W * sizeof(u64))
    memset(ctx.assigned, 0, W * sizeof(u64))
    memset(ctx.best_assign, 0, nv)
    for i in range(nv):
        ctx.assign[i] = -1
    ctx.m_total = m_total
    ctx.best = -1
    ctx.nodes = 0
    ctx.node_cap = node_cap
    ctx.aborted = 0

    _cut_dfs(&ctx, 0, 0, 0, 0)

    assign_np = np.empty(nv, dtype=np.int8)
    cdef signed char[::1] av = assign_np
    for i in range(nv):
        av[i] = ctx.best_assign[i]
    best = int(ctx.best)
    nodes = int(ctx.nodes)
    complete = not ctx.aborted
    free(ctx.parts)
    free(ctx.assigned)
    free(ctx.assign)
    free(ctx.best_assign)
    return best, assign_np, nodes, complete
