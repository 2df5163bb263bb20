"""Pure-Python implementations of the hot kernels.

Same algorithms and outputs as the compiled module ``daisy._core``; used
when the extension is unavailable or DAISY_PURE=1 is set.  Bitsets are
Python ints here, 64-bit word arrays there.
"""

from __future__ import annotations

import numpy as np


def _vertex_incidence(tri: np.ndarray, n: int):
    """CSR-style map vertex -> indices of incident edges, built vectorized."""
    m = tri.shape[0]
    stack = np.concatenate([tri[:, 0], tri[:, 1], tri[:, 2]]).astype(np.int64)
    order = np.argsort(stack, kind="stable")
    starts = np.searchsorted(stack[order], np.arange(n + 1))
    edge_idx = order % m
    return starts, edge_idx


def color_suspects_r3(tri, n: int, k: int, v_lo: int = 0, v_hi=None) -> np.ndarray:
    """Vertices of a 3-graph whose link might contain a k-clique.

    Greedy-colors each vertex link in ascending vertex order; a link that
    gets by with at most k-1 colors is certified K_k-free and filtered
    out.  Exact clique search on the survivors is the caller's job.
    """
    if k < 2:
        raise ValueError("clique size must be at least 2")
    tri = np.ascontiguousarray(tri, dtype=np.int32)
    hi = n if v_hi is None else int(v_hi)
    m = tri.shape[0]
    if m == 0 or n == 0 or v_lo >= hi:
        return np.empty(0, dtype=np.int32)
    starts, edge_idx = _vertex_incidence(tri, n)
    tri_list = tri.tolist()
    ncls = k - 1
    suspects = []
    for v in range(v_lo, hi):
        lo, up = starts[v], starts[v + 1]
        if lo == up:
            continue
        rows = [0] * n
        for ei in edge_idx[lo:up]:
            a, b, c = tri_list[ei]
            if a == v:
                x, y = b, c
            elif b == v:
                x, y = a, c
            else:
                x, y = a, b
            rows[x] |= 1 << y
            rows[y] |= 1 << x
        classes = [0] * ncls
        bad = False
        for u in range(n):
            row = rows[u]
            if not row:
                continue
            for col in range(ncls):
                if not (classes[col] & row):
                    classes[col] |= 1 << u
                    break
            else:
                bad = True
                break
        if bad:
            suspects.append(v)
    return np.asarray(suspects, dtype=np.int32)


def link_rows_r3(tri, n: int, v: int) -> np.ndarray:
    """Bitset adjacency of the link of v, as an (n, ceil(n/64)) uint64 array."""
    tri = np.ascontiguousarray(tri, dtype=np.int32)
    W = max(1, (n + 63) // 64)
    rows = [0] * n
    mask = (tri == v).any(axis=1)
    for a, b, c in tri[mask].tolist():
        if a == v:
            x, y = b, c
        elif b == v:
            x, y = a, c
        else:
            x, y = a, b
        rows[x] |= 1 << y
        rows[y] |= 1 << x
    out = np.zeros((n, W), dtype=np.uint64)
    for u in range(n):
        row = rows[u]
        w = 0
        while row:
            out[u, w] = row & 0xFFFFFFFFFFFFFFFF
            row >>= 64
            w += 1
    return out


def is_min_labeled_arr(edges_arr, n: int, r: int, ref_arr) -> bool:
    """Array-interface wrapper over the minimum-word canonicity check."""
    from .canon import is_min_labeled
    arr = np.asarray(edges_arr, dtype=np.int32).reshape(-1, r)
    edges = [tuple(int(x) for x in row) for row in arr]
    ref = tuple(int(x) for x in np.asarray(ref_arr, dtype=np.int64))
    return is_min_labeled(edges, n, ref_word=ref)


def max_cut_exact(words, nv: int, t: int, node_cap: int):
    """Exact maximum t-way cut by branch and bound.

    Vertices are assigned parts in ascending order; part indices are
    introduced in first-use order, which both breaks the part-relabeling
    symmetry and makes the first maximum found the lexicographically
    least assignment vector.  Returns (cut, assignment, nodes, complete).
    """
    if nv == 0:
        return 0, np.empty(0, dtype=np.int8), 1, True
    words = np.ascontiguousarray(words, dtype=np.uint64)
    rows = [int.from_bytes(words[i].tobytes(), "little") for i in range(nv)]
    m_total = sum(r.bit_count() for r in rows) // 2
    assign = [-1] * nv
    best_assign = [0] * nv
    state = {"best": -1, "nodes": 0, "aborted": False, "assigned": 0}
    parts = [0] * t

    def dfs(v, cross, inside, used):
        if state["aborted"]:
            return
        state["nodes"] += 1
        if state["nodes"] > node_cap:
            state["aborted"] = True
            return
        if v == nv:
            if cross > state["best"]:
                state["best"] = cross
                best_assign[:] = assign
            return
        if m_total - inside <= state["best"]:
            return
        row = rows[v]
        adj_assigned = (row & state["assigned"]).bit_count()
        bit = 1 << v
        for c in range(min(used + 1, t)):
            in_gain = (row & parts[c]).bit_count()
            assign[v] = c
            parts[c] |= bit
            state["assigned"] |= bit
            dfs(v + 1, cross + adj_assigned - in_gain, inside + in_gain,
                used + (1 if c == used else 0))
            parts[c] &= ~bit
            state["assigned"] &= ~bit
            assign[v] = -1
            if state["aborted"]:
                return

    dfs(0, 0, 0, 0)
    return (state["best"], np.asarray(best_assign, dtype=np.int8),
            state["nodes"], not state["aborted"])
