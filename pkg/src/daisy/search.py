"""Exact Turán numbers for small n, with an independent validation oracle.

The main search is orderly generation: edge sets grow only by edges above
their colex-maximum, and a grown set survives only if its labeling is the
lexicographically least over all vertex relabelings (see daisy.canon for
why deleting the colex-max edge preserves that property).  Every
isomorphism class of feasible edge sets is therefore visited exactly
once, which makes the reported maximum exhaustive.

The oracle enumerates *all* labeled edge subsets (pruned only by
monotonicity of the feasibility predicate and by remaining-count), with
its own feasibility bookkeeping -- a deliberately separate code path used
to validate the search on tiny instances.

Worker threads expand fixed depth-2 subtrees and are merged by value then
by edge word, so results (including node counts) are identical for any
thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import _kernels
from .canon import colex_code
from .errors import CapExceeded, DaisyError
from .hypergraph import Hypergraph

DEFAULT_NODE_CAP = 5 * 10 ** 6
ORACLE_EDGE_SLOTS = 22


@dataclass(frozen=True)
class SearchProblem:
    """What to maximize: edges of an n-vertex r-graph avoiding the
    (r, t)-daisy ("daisy" mode), or of a 3-graph whose every vertex link
    is properly t-colorable ("link-partite" mode)."""

    n: int
    mode: str
    t: int
    r: int = 3
    threads: int = 1
    node_cap: int = DEFAULT_NODE_CAP
    all_extremal: bool = True

    def __post_init__(self):
        if self.mode not in ("daisy", "link-partite"):
            raise DaisyError(f"unknown search mode {self.mode!r}")
        if self.mode == "link-partite" and self.r != 3:
            raise DaisyError("link-partite search is a 3-graph problem")
        if self.r < 2:
            raise DaisyError("uniformity must be at least 2")
        if self.n < self.r:
            raise DaisyError(f"need n >= r, got n={self.n}, r={self.r}")
        if self.mode == "daisy" and self.t < 2:
            raise DaisyError("daisy mode needs t >= 2")
        if self.mode == "link-partite" and self.t < 1:
            raise DaisyError("link-partite mode needs t >= 1")
        if self.threads < 1:
            raise DaisyError("thread count must be positive")


@dataclass
class SearchResult:
    problem: SearchProblem
    optimum: int
    extremal: list[Hypergraph]
    nodes: int
    complete: bool
    oracle_checked: bool = False
    oracle_value: int | None = None

    def as_dict(self) -> dict:
        return {
            "mode": self.problem.mode,
            "n": self.problem.n,
            "params": {"r": self.problem.r, "t": self.problem.t},
            "optimum": self.optimum,
            "complete": self.complete,
            "extremal": [sorted(h.edges()) for h in self.extremal],
            "nodes": self.nodes,
            "oracle_checked": self.oracle_checked,
        }


# --- feasibility predicates (search side) -------------------------------------

class _DaisyFeasibility:
    """Adding edge e keeps the set daisy-free iff no (r-2)-subset S of e
    acquires a K_t in its link through the pair e minus S."""

    def __init__(self, n: int, r: int, t: int):
        self.n = n
        self.r = r
        self.t = t
        self.eset: set[tuple[int, ...]] = set()

    def _adj(self, S: tuple[int, ...], a: int, b: int) -> bool:
        return tuple(sorted(S + (a, b))) in self.eset

    def can_add(self, e: tuple[int, ...]) -> bool:
        r, t = self.r, self.t
        self.eset.add(e)
        try:
            for spos in combinations(range(r), r - 2):
                S = tuple(e[i] for i in spos)
                u, v = (e[i] for i in range(r) if i not in spos)
                cands = [w for w in range(self.n) if w not in e
                         and self._adj(S, u, w) and self._adj(S, v, w)]
                if self._has_clique(S, cands, t - 2):
                    return False
            return True
        finally:
            self.eset.remove(e)

    def _has_clique(self, S, cands: list[int], need: int) -> bool:
        if need <= 0:
            return True
        if len(cands) < need:
            return False
        for i, w in enumerate(cands):
            sub = [x for x in cands[i + 1:] if self._adj(S, w, x)]
            if self._has_clique(S, sub, need - 1):
                return True
        return False

    def push(self, e):
        self.eset.add(e)

    def pop(self, e):
        self.eset.remove(e)


class _LinkPartiteFeasibility:
    """Adding edge e keeps every vertex link t-colorable; only the three
    links touched by e need rechecking."""

    def __init__(self, n: int, t: int):
        self.n = n
        self.t = t
        self.links: list[dict[int, int]] = [dict() for _ in range(n)]
        self._memo: dict[frozenset, bool] = {}

    def _with_pair(self, v: int, x: int, y: int) -> bool:
        rows = {u: bits for u, bits in self.links[v].items()}
        rows[x] = rows.get(x, 0) | (1 << y)
        rows[y] = rows.get(y, 0) | (1 << x)
        key = frozenset((u, bits) for u, bits in rows.items())
        hit = self._memo.get(key)
        if hit is None:
            hit = _colorable(rows, self.t)
            self._memo[key] = hit
        return hit

    def can_add(self, e: tuple[int, ...]) -> bool:
        a, b, c = e
        return (self._with_pair(a, b, c) and self._with_pair(b, a, c)
                and self._with_pair(c, a, b))

    def push(self, e):
        a, b, c = e
        for v, x, y in ((a, b, c), (b, a, c), (c, a, b)):
            links = self.links[v]
            links[x] = links.get(x, 0) | (1 << y)
            links[y] = links.get(y, 0) | (1 << x)

    def pop(self, e):
        a, b, c = e
        for v, x, y in ((a, b, c), (b, a, c), (c, a, b)):
            links = self.links[v]
            links[x] &= ~(1 << y)
            links[y] &= ~(1 << x)
            if not links[x]:
                del links[x]
            if not links[y]:
                del links[y]


def _colorable(rows: dict[int, int], t: int) -> bool:
    """Exact t-colorability of a small graph given as vertex -> neighbor
    bitset (only vertices with neighbors present)."""
    order = sorted(rows, key=lambda u: (-rows[u].bit_count(), u))
    colors: dict[int, int] = {}

    def bt(i: int, used: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        forbidden = 0
        row = rows[u]
        for w, cw in colors.items():
            if (row >> w) & 1:
                forbidden |= 1 << cw
        for c in range(min(used + 1, t)):
            if (forbidden >> c) & 1:
                continue
            colors[u] = c
            if bt(i + 1, max(used, c + 1)):
                return True
            del colors[u]
        return False

    return bt(0, 0)


def _make_feasibility(prob: SearchProblem):
    if prob.mode == "daisy":
        return _DaisyFeasibility(prob.n, prob.r, prob.t)
    return _LinkPartiteFeasibility(prob.n, prob.t)


# --- orderly search -------------------------------------------------------------

class _Searcher:
    def __init__(self, prob: SearchProblem):
        self.prob = prob
        n, r = prob.n, prob.r
        self.all_edges = sorted(combinations(range(n), r),
                                key=lambda e: tuple(reversed(e)))
        self.codes = [colex_code(e, n) for e in self.all_edges]
        # local capacity bound for the smallest daisy: every 4 vertices
        # carry at most 2 edges
        self.use_cap4 = (prob.mode == "daisy" and prob.r == 3 and prob.t == 3
                         and n >= 4)
        if self.use_cap4:
            self.foursets = list(combinations(range(n), 4))
            self.fourset_index = {S: i for i, S in enumerate(self.foursets)}
            self.edge_foursets = []
            for e in self.all_edges:
                others = [w for w in range(n) if w not in e]
                self.edge_foursets.append(
                    [self.fourset_index[tuple(sorted(e + (w,)))] for w in others])
            self.fourset_maxcode = [
                max(colex_code(tr, n) for tr in combinations(S, 3))
                for S in self.foursets]

    def _is_canonical(self, edges: list, word) -> bool:
        arr = np.asarray(edges, dtype=np.int32)
        ref = np.asarray(word, dtype=np.int64)
        return _kernels.active().is_min_labeled_arr(arr, self.prob.n, self.prob.r, ref)

    def _expand(self, feas, edges: list, word: list, start_idx: int,
                cnt4, node_budget: list, stats: dict):
        """DFS under one subtree; edges/word/cnt4 are the path state.

        Pruning compares against the subtree's own best (never a shared
        one), which keeps node counts identical for every thread count; a
        subtree cut below its local best cannot hold a globally extremal
        set either, since the global optimum is at least that best.
        """
        n = self.prob.n
        n_edges = len(self.all_edges)
        size = len(edges)
        for idx in range(start_idx, n_edges):
            if size + (n_edges - idx) < stats["best"]:
                break
            if self.use_cap4:
                code = self.codes[idx]
                avail = 0
                for si, c in enumerate(cnt4):
                    if self.fourset_maxcode[si] >= code:
                        avail += 2 - c
                if size + min(n_edges - idx, avail // (n - 3)) < stats["best"]:
                    break
            e = self.all_edges[idx]
            if not feas.can_add(e):
                continue
            edges.append(e)
            word.append(self.codes[idx])
            if self._is_canonical(edges, word):
                node_budget[0] -= 1
                if node_budget[0] < 0:
                    stats["aborted"] = True
                    edges.pop()
                    word.pop()
                    return
                stats["nodes"] += 1
                self._collect(stats, edges)
                feas.push(e)
                if self.use_cap4:
                    for si in self.edge_foursets[idx]:
                        cnt4[si] += 1
                self._expand(feas, edges, word, idx + 1, cnt4, node_budget, stats)
                if self.use_cap4:
                    for si in self.edge_foursets[idx]:
                        cnt4[si] -= 1
                feas.pop(e)
                if stats["aborted"]:
                    edges.pop()
                    word.pop()
                    return
            edges.pop()
            word.pop()

    def _collect(self, stats: dict, edges: list):
        size = len(edges)
        if size > stats["best"]:
            stats["best"] = size
            stats["snapshots"] = [tuple(edges)]
        elif size == stats["best"]:
            stats["snapshots"].append(tuple(edges))


def turan_number(prob: SearchProblem) -> SearchResult:
    """The exact maximum, with every extremal edge set in canonical labeled
    form (one per isomorphism class) unless all_extremal is off."""
    searcher = _Searcher(prob)
    n = prob.n
    n_edges = len(searcher.all_edges)

    # breadth-2 prefix, expanded sequentially: its nodes are both result
    # candidates and the roots of the parallel work units
    prefix_snapshots: list[tuple] = [()]
    prefix_nodes = 1
    units = []  # (edges tuple, word tuple, next index, cnt4 or None)
    feas = _make_feasibility(prob)
    for i in range(n_edges):
        e1 = searcher.all_edges[i]
        if not feas.can_add(e1):
            continue
        if not searcher._is_canonical([e1], (searcher.codes[i],)):
            continue
        prefix_nodes += 1
        prefix_snapshots.append((e1,))
        feas.push(e1)
        for j in range(i + 1, n_edges):
            e2 = searcher.all_edges[j]
            if not feas.can_add(e2):
                continue
            word = (searcher.codes[i], searcher.codes[j])
            if not searcher._is_canonical([e1, e2], word):
                continue
            prefix_nodes += 1
            prefix_snapshots.append((e1, e2))
            units.append(((e1, e2), word, j + 1))
        feas.pop(e1)

    per_unit_cap = max(1, (prob.node_cap - prefix_nodes) // max(1, len(units)))

    def run_unit(unit):
        (edges0, word0, start) = unit
        feas = _make_feasibility(prob)
        cnt4 = [0] * len(searcher.foursets) if searcher.use_cap4 else None
        edge_index = {e: k for k, e in enumerate(searcher.all_edges)}
        for e in edges0:
            feas.push(e)
            if searcher.use_cap4:
                for si in searcher.edge_foursets[edge_index[e]]:
                    cnt4[si] += 1
        stats = {"nodes": 0, "aborted": False, "best": len(edges0),
                 "snapshots": [tuple(edges0)]}
        searcher._expand(feas, list(edges0), list(word0), start, cnt4,
                         [per_unit_cap], stats)
        return stats

    if prob.threads > 1 and units:
        with ThreadPoolExecutor(max_workers=prob.threads) as pool:
            unit_stats = list(pool.map(run_unit, units))
    else:
        unit_stats = [run_unit(u) for u in units]

    total_nodes = prefix_nodes + sum(s["nodes"] for s in unit_stats)
    complete = not any(s["aborted"] for s in unit_stats)
    optimum = max([len(s) for s in prefix_snapshots]
                  + [s["best"] for s in unit_stats], default=0)
    pool_snaps = {s for s in prefix_snapshots if len(s) == optimum}
    for st in unit_stats:
        if st["best"] == optimum:
            pool_snaps.update(st["snapshots"])
    ordered = sorted(pool_snaps, key=lambda snap: tuple(colex_code(e, n) for e in snap))
    if not prob.all_extremal and ordered:
        ordered = ordered[:1]
    extremal = [Hypergraph(n, prob.r, snap) for snap in ordered]
    return SearchResult(problem=prob, optimum=optimum, extremal=extremal,
                        nodes=total_nodes, complete=complete)


# --- independent oracle ------------------------------------------------------------

class _OracleDaisy:
    """Per-(r-2)-set link adjacency maps, maintained incrementally."""

    def __init__(self, n: int, r: int, t: int):
        self.n = n
        self.r = r
        self.t = t
        self.links: dict[tuple, dict[int, set[int]]] = {}

    def can_add(self, e) -> bool:
        t = self.t
        for spos in combinations(range(self.r), self.r - 2):
            S = tuple(e[i] for i in spos)
            u, v = (e[i] for i in range(self.r) if i not in spos)
            adj = self.links.get(S)
            if adj is None:
                if t <= 2:
                    return False
                continue
            common = adj.get(u, set()) & adj.get(v, set())
            common.discard(u)
            common.discard(v)
            if self._clique_in(adj, sorted(common), t - 2):
                return False
        return True

    def _clique_in(self, adj, cands: list[int], need: int) -> bool:
        if need <= 0:
            return True
        if len(cands) < need:
            return False
        for i, w in enumerate(cands):
            nb = adj.get(w, set())
            sub = [x for x in cands[i + 1:] if x in nb]
            if self._clique_in(adj, sub, need - 1):
                return True
        return False

    def push(self, e):
        for spos in combinations(range(self.r), self.r - 2):
            S = tuple(e[i] for i in spos)
            u, v = (e[i] for i in range(self.r) if i not in spos)
            adj = self.links.setdefault(S, {})
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)

    def pop(self, e):
        for spos in combinations(range(self.r), self.r - 2):
            S = tuple(e[i] for i in spos)
            u, v = (e[i] for i in range(self.r) if i not in spos)
            adj = self.links[S]
            adj[u].discard(v)
            adj[v].discard(u)


class _OracleLinkPartite:
    def __init__(self, n: int, t: int):
        self.n = n
        self.t = t
        self.pairs: list[set[tuple[int, int]]] = [set() for _ in range(n)]
        self._memo: dict[frozenset, bool] = {}

    def _check(self, v, extra) -> bool:
        key = frozenset(self.pairs[v] | {extra})
        hit = self._memo.get(key)
        if hit is None:
            rows: dict[int, int] = {}
            for x, y in key:
                rows[x] = rows.get(x, 0) | (1 << y)
                rows[y] = rows.get(y, 0) | (1 << x)
            hit = _colorable(rows, self.t)
            self._memo[key] = hit
        return hit

    def can_add(self, e) -> bool:
        a, b, c = e
        return (self._check(a, (b, c)) and self._check(b, (a, c))
                and self._check(c, (a, b)))

    def push(self, e):
        a, b, c = e
        self.pairs[a].add((b, c))
        self.pairs[b].add((a, c))
        self.pairs[c].add((a, b))

    def pop(self, e):
        a, b, c = e
        self.pairs[a].discard((b, c))
        self.pairs[b].discard((a, c))
        self.pairs[c].discard((a, b))


def naive_oracle(prob: SearchProblem) -> int:
    """Maximum feasible edge count over all labeled edge subsets.

    Full enumeration: supersets of infeasible sets are skipped, which is
    exhaustive because feasibility is preserved under edge removal, and
    subtrees that cannot beat the incumbent are cut by remaining count.
    """
    slots = comb(prob.n, prob.r)
    if slots > ORACLE_EDGE_SLOTS:
        raise CapExceeded(
            f"oracle enumerates 2^{slots} subsets; cap is 2^{ORACLE_EDGE_SLOTS}")
    edges_all = list(combinations(range(prob.n), prob.r))
    if prob.mode == "daisy":
        state = _OracleDaisy(prob.n, prob.r, prob.t)
    else:
        state = _OracleLinkPartite(prob.n, prob.t)
    n_edges = len(edges_all)
    best = 0

    def extend(idx: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if idx == n_edges or size + (n_edges - idx) <= best:
            return
        e = edges_all[idx]
        if state.can_add(e):
            state.push(e)
            extend(idx + 1, size + 1)
            state.pop(e)
        extend(idx + 1, size)

    extend(0, 0)
    return best


def extremal_degree_spread(result: SearchResult) -> int:
    """Max over extremal instances of (max degree - min degree); raises if
    any instance exceeds n - 2, which the cloning argument rules out for
    exact daisy-mode results."""
    prob = result.problem
    if prob.mode != "daisy" or prob.r != 3:
        raise DaisyError("degree spread check applies to daisy mode, r = 3")
    if not result.complete:
        raise DaisyError("degree spread check needs a complete (exact) result")
    worst = 0
    for h in result.extremal:
        degs = h.degrees()
        spread = int(degs.max() - degs.min()) if h.n else 0
        if spread > prob.n - 2:
            raise DaisyError(
                f"extremal instance with degree spread {spread} > n-2 = {prob.n - 2}")
        worst = max(worst, spread)
    return worst
