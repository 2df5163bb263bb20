"""Link-partition audits on concrete 3-graphs.

For every vertex x we fix a t-partition of the remaining vertices that
maximizes the number of link edges crossing between parts (exact by
branch and bound under a size cap, deterministic local search beyond),
then measure the bad inside-part link edges B^x, the missing cross-pairs
M^x, the per-vertex potential Phi built from their degrees, and the
part-level sums P_j, Q_j, C_{i,j}, T(a) that drive the weighted averaging
over a chosen base vertex and pair of parts.  Two facts that are pure
double counting are checked exactly on every run; threshold comparisons
are reported as data, never asserted.

All stored quantities are integers or exact rationals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import CapExceeded, DaisyError
from . import _kernels
from .hypergraph import Graph, Hypergraph

CUT_ASSIGNMENT_BUDGET = 2 ** 22   # exact cap: t ** (active vertices) at most this
CUT_NODE_CAP = 10 ** 8
HEURISTIC_RESTARTS = 8
GLOBAL_AUDIT_VERTEX_CAP = 64


def exact_cut_cap(t: int) -> int:
    """Largest active-vertex count allowed in exact mode for a given t."""
    c = 0
    while t ** (c + 1) <= CUT_ASSIGNMENT_BUDGET:
        c += 1
    return c


@dataclass
class LinkPartition:
    """A t-partition of a chosen vertex set with its cross-edge count."""

    base: int | None
    t: int
    assignment: dict            # vertex -> part index
    parts: list[list[int]]      # ascending vertex lists
    cross_edges: int
    mode: str                   # "exact" | "heuristic"

    @property
    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]


def _cut_value(rows: Sequence[int], assignment: dict) -> tuple[int, int]:
    """(cross, inside) edge counts of an assignment, among assigned vertices."""
    cross = inside = 0
    items = list(assignment.items())
    for idx, (u, cu) in enumerate(items):
        for v, cv in items[idx + 1:]:
            if (rows[u] >> v) & 1:
                if cu == cv:
                    inside += 1
                else:
                    cross += 1
    return cross, inside


def max_cut_partition(G: Graph, t: int, mode: str = "exact",
                      vertices: Sequence[int] | None = None,
                      seed: int = 0) -> LinkPartition:
    """A t-partition of the given vertices (default all of G) maximizing
    the number of crossing edges.

    Exact mode returns the true maximum with ties broken by the
    lexicographically least assignment vector; vertices isolated inside
    the chosen set are placed in part 0, which the tie-break forces
    anyway.  Heuristic mode runs deterministic seeded restarts of
    single-vertex moves and flags itself.
    """
    if t < 1:
        raise DaisyError(f"part count must be positive, got {t}")
    vs = sorted(vertices) if vertices is not None else list(range(G.n))
    vset = set(vs)
    active = [v for v in vs if any(((G.rows[v] >> u) & 1) for u in vset if u != v)]
    isolated = [v for v in vs if v not in set(active)]

    if mode == "exact":
        if t ** max(1, len(active)) > CUT_ASSIGNMENT_BUDGET:
            raise CapExceeded(
                f"exact max-cut cap: {len(active)} active vertices exceeds "
                f"{exact_cut_cap(t)} for t={t}; use heuristic mode")
        sub = G.subgraph_rows(active)
        W = max(1, (len(active) + 63) // 64)
        words = np.zeros((len(active), W), dtype=np.uint64)
        for i, row in enumerate(sub):
            w = 0
            while row:
                words[i, w] = row & 0xFFFFFFFFFFFFFFFF
                row >>= 64
                w += 1
        best, assign, _nodes, complete = _kernels.active().max_cut_exact(
            words, len(active), t, CUT_NODE_CAP)
        if not complete:
            raise CapExceeded("exact max-cut node cap exceeded")
        assignment = {v: 0 for v in isolated}
        for i, v in enumerate(active):
            assignment[v] = int(assign[i])
        cross = int(best)
    elif mode == "heuristic":
        assignment, cross = _heuristic_cut(G, t, vs, active, seed)
    else:
        raise DaisyError(f"unknown mode {mode!r}")

    parts = [[] for _ in range(t)]
    for v in vs:
        parts[assignment[v]].append(v)
    for p in parts:
        p.sort()
    return LinkPartition(base=None, t=t, assignment=assignment, parts=parts,
                         cross_edges=cross, mode=mode)


def _heuristic_cut(G: Graph, t: int, vs: list[int], active: list[int],
                   seed: int) -> tuple[dict, int]:
    rows = G.rows
    vmask_parts = [0] * t

    def local_opt(assignment: dict) -> tuple[dict, int]:
        for c in range(t):
            vmask_parts[c] = 0
        for v, c in assignment.items():
            vmask_parts[c] |= 1 << v
        improved = True
        while improved:
            improved = False
            for v in active:
                row = rows[v]
                cur = assignment[v]
                gains = [(row & vmask_parts[c]).bit_count() for c in range(t)]
                best_c = min(range(t), key=lambda c: (gains[c], c))
                if gains[best_c] < gains[cur]:
                    vmask_parts[cur] &= ~(1 << v)
                    vmask_parts[best_c] |= 1 << v
                    assignment[v] = best_c
                    improved = True
        cross = 0
        for v in active:
            row = rows[v]
            for c in range(t):
                if c != assignment[v]:
                    cross += (row & vmask_parts[c]).bit_count()
        return assignment, cross // 2

    best_assignment = None
    best_cross = -1
    rng = random.Random(seed)
    starts = [{v: i % t for i, v in enumerate(active)}]
    for _ in range(HEURISTIC_RESTARTS):
        starts.append({v: rng.randrange(t) for v in active})
    for start in starts:
        assignment, cross = local_opt(dict(start))
        key = tuple(assignment[v] for v in active)
        if cross > best_cross or (cross == best_cross and
                                  key < tuple(best_assignment[v] for v in active)):
            best_cross = cross
            best_assignment = assignment
    out = {v: 0 for v in vs}
    out.update(best_assignment)
    return out, best_cross


@dataclass
class PartitionAudit:
    """B^x, M^x and part sizes for one base vertex under its partition."""

    base: int
    t: int
    n: int
    partition: LinkPartition
    bad_pairs: list[tuple[int, int]]        # link edges inside parts
    missing_pairs: list[tuple[int, int]]    # cross pairs absent from the link
    link_edges: int

    @property
    def part_sizes(self) -> list[Fraction]:
        return [Fraction(len(p), self.n) for p in self.partition.parts]

    @property
    def cross_pairs_total(self) -> int:
        sizes = [len(p) for p in self.partition.parts]
        total = sum(sizes)
        return (total * total - sum(s * s for s in sizes)) // 2


def partition_audit(H: Hypergraph, x: int, t: int, mode: str = "exact",
                    seed: int = 0) -> PartitionAudit:
    """Partition the link of x over all other vertices and collect the
    inside-part link edges and the missing cross-pairs."""
    if H.r != 3:
        raise DaisyError("partition audits are a 3-graph computation")
    if not 0 <= x < H.n:
        raise DaisyError(f"vertex {x} out of range")
    link = H.link_graph((x,))
    others = [v for v in range(H.n) if v != x]
    part = max_cut_partition(link, t, mode=mode, vertices=others, seed=seed)
    part.base = x
    assignment = part.assignment
    bad = [(u, v) for u, v in link.edges() if assignment[u] == assignment[v]]
    missing = []
    for i in range(t):
        for j in range(i + 1, t):
            for u in part.parts[i]:
                row = link.rows[u]
                for v in part.parts[j]:
                    if not (row >> v) & 1:
                        missing.append((u, v) if u < v else (v, u))
    missing.sort()
    return PartitionAudit(base=x, t=t, n=H.n, partition=part, bad_pairs=bad,
                          missing_pairs=missing, link_edges=link.m)


def l2_part_balance(audit: PartitionAudit) -> Fraction:
    """Exact sum of squared deviations of part-size fractions from 1/t."""
    t = audit.t
    return sum(((s - Fraction(1, t)) ** 2 for s in audit.part_sizes), Fraction(0))


@dataclass(frozen=True)
class AveragingConstants:
    """The fixed weights of the averaging argument, as exact rationals."""

    t: int
    theta: Fraction = Fraction(1, 10 ** 4)
    lam: Fraction = Fraction(5, 3)
    K: Fraction = Fraction(34, 3)

    @property
    def epsilon(self) -> Fraction:
        return Fraction(1, 12 * self.t * self.t)

    def consistent(self) -> bool:
        return (1 + self.theta) * Fraction(34, 36) < 1


@dataclass
class GlobalAudit:
    n: int
    t: int
    lam: Fraction
    mode: str
    audits: list[PartitionAudit]
    phi: list[Fraction]
    x_star: int
    P: list[int]
    Q: list[int]
    C: list[list[int]]              # C[i][j], diagonal zero
    chosen_i: list[int | None]      # i(j) per j
    chosen_ij: tuple[int, int] | None
    A: list[int]
    B: list[int]
    T: dict
    T_max: int | None
    a0: int | None
    phi_identity: tuple[Fraction, Fraction, bool]
    pq_expansion: tuple[Fraction, Fraction, bool]
    turan_check: tuple[int, Fraction, bool] | None
    injection_checks: list[dict]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "lambda": str(self.lam),
            "mode": self.mode,
            "phi": [str(p) for p in self.phi],
            "x_star": self.x_star,
            "P": self.P,
            "Q": self.Q,
            "C": self.C,
            "chosen_ij": list(self.chosen_ij) if self.chosen_ij else None,
            "T_max": self.T_max,
            "turan_check": None if self.turan_check is None else {
                "lhs": self.turan_check[0],
                "rhs": str(self.turan_check[1]),
                "ok": self.turan_check[2],
            },
        }


def _degree_arrays(aud: PartitionAudit, n: int) -> tuple[list[int], list[int]]:
    dM = [0] * n
    dB = [0] * n
    for u, v in aud.missing_pairs:
        dM[u] += 1
        dM[v] += 1
    for u, v in aud.bad_pairs:
        dB[u] += 1
        dB[v] += 1
    return dM, dB


def global_audit(H: Hypergraph, t: int, consts: AveragingConstants | None = None,
                 mode: str = "exact", seed: int = 0) -> GlobalAudit:
    """Run the full per-vertex audit and the weighted choice of base vertex
    and parts; check the two unconditional identities along the way."""
    if H.r != 3:
        raise DaisyError("global audits are a 3-graph computation")
    if H.n > GLOBAL_AUDIT_VERTEX_CAP:
        raise CapExceeded(f"global audit cap is {GLOBAL_AUDIT_VERTEX_CAP} vertices")
    if consts is None:
        consts = AveragingConstants(t=t)
    lam = consts.lam
    n = H.n

    audits = [partition_audit(H, x, t, mode=mode, seed=seed) for x in range(n)]
    dM = []
    dB = []
    for aud in audits:
        a, b = _degree_arrays(aud, n)
        dM.append(a)
        dB.append(b)

    phi = [sum(dM[w][z] for w in range(n)) + lam * sum(dB[w][z] for w in range(n))
           for z in range(n)]
    lhs = sum(phi, Fraction(0))
    rhs = (2 * sum(len(a.missing_pairs) for a in audits)
           + 2 * lam * sum(len(a.bad_pairs) for a in audits))
    phi_identity = (lhs, Fraction(rhs), lhs == rhs)

    x = min(range(n), key=lambda z: (phi[z], z))
    ax = audits[x]
    parts = ax.partition.parts
    sizes = [len(p) for p in parts]

    P = [sum(dM[x][w] for w in parts[j]) + sum(dB[w][x] for w in parts[j])
         for j in range(t)]
    Q = [sum(dM[w][x] for w in parts[j]) + sum(dB[x][w] for w in parts[j])
         for j in range(t)]

    pq_lhs = sum((Q[j] + lam * P[j] for j in range(t)), Fraction(0))
    pq_rhs = (2 * lam * len(ax.missing_pairs) + 2 * len(ax.bad_pairs)
              + sum(dM[w][x] for w in range(n))
              + lam * sum(dB[w][x] for w in range(n)))
    pq_expansion = (pq_lhs, Fraction(pq_rhs), pq_lhs == pq_rhs)

    C = [[0] * t for _ in range(t)]
    for j in range(t):
        for i in range(t):
            if i == j:
                continue
            C[i][j] = sum(dM[w][a] for w in parts[j] for a in parts[i])

    chosen_i: list[int | None] = []
    for j in range(t):
        best_i = None
        best_val = None
        for i in range(t):
            if i == j or sizes[i] == 0:
                continue
            val = Fraction(sizes[j] * P[j] + C[i][j], sizes[i])
            if best_val is None or val < best_val:
                best_val = val
                best_i = i
        chosen_i.append(best_i)

    chosen = None
    chosen_val = None
    for j in range(t):
        i = chosen_i[j]
        if i is None or sizes[j] == 0:
            continue
        expr = Q[j] + Fraction(sizes[j] * P[j] + C[i][j], sizes[i])
        val = expr / (sizes[j] * sizes[j])
        if chosen_val is None or val < chosen_val:
            chosen_val = val
            chosen = (i, j)

    A: list[int] = []
    B: list[int] = []
    T: dict = {}
    T_max = None
    a0 = None
    turan_check = None
    injections: list[dict] = []
    if chosen is not None:
        i_star, j_star = chosen
        A = parts[i_star]
        B = parts[j_star]
        link_rows_cache = {w: H.link_graph((w,)) for w in B}
        bmask = 0
        for v in B:
            bmask |= 1 << v
        part_of_x = {w: audits[w].partition.assignment[x] for w in B}
        for a in A:
            total = 0
            for w in B:
                if audits[w].partition.assignment[a] == part_of_x[w]:
                    continue
                total += (link_rows_cache[w].rows[a] & bmask).bit_count()
            T[a] = total
        a0 = min((a for a in A), key=lambda a: (-T[a], a), default=None)
        if a0 is not None:
            T_max = T[a0]
            la0 = H.link_graph((a0,))
            lhs_t = la0.edges_inside(B)
            rhs_t = (1 - Fraction(1, t)) * Fraction(len(B) ** 2, 2)
            turan_check = (lhs_t, rhs_t, Fraction(lhs_t) <= rhs_t)
        for w in B:
            pw = part_of_x[w]
            wparts = audits[w].partition.parts
            pw_set = set(wparts[pw])
            lhs1 = sum(1 for a in A if a in pw_set)
            rhs1 = dM[x][w] + dB[w][x]
            lhs2 = sum(1 for b in B if b not in pw_set)
            rhs2 = dM[w][x] + dB[x][w] + 1
            injections.append({"w": w, "inside_A": lhs1, "inside_A_bound": rhs1,
                               "outside_B": lhs2, "outside_B_bound": rhs2,
                               "ok": lhs1 <= rhs1 and lhs2 <= rhs2})

    return GlobalAudit(
        n=n, t=t, lam=lam, mode=mode, audits=audits, phi=phi, x_star=x,
        P=P, Q=Q, C=C, chosen_i=chosen_i, chosen_ij=chosen, A=A, B=B,
        T=T, T_max=T_max, a0=a0, phi_identity=phi_identity,
        pq_expansion=pq_expansion, turan_check=turan_check,
        injection_checks=injections)


@dataclass
class ClaimBoundsRow:
    x: int
    bad: int
    missing: int
    bad_threshold: Fraction
    missing_threshold: Fraction

    @property
    def bad_ok(self) -> bool:
        return self.bad <= self.bad_threshold

    @property
    def missing_ok(self) -> bool:
        return self.missing <= self.missing_threshold


def claim_bounds(H: Hypergraph, t: int, consts: AveragingConstants | None = None,
                 mode: str = "exact", seed: int = 0) -> list[ClaimBoundsRow]:
    """Per-vertex |B^x| and |M^x| against the near-extremal thresholds
    (1+theta) eps n^2 / 2 and (1+theta) eps n^2.  Reported, not asserted:
    the thresholds are meaningful only for near-extremal inputs."""
    if consts is None:
        consts = AveragingConstants(t=t)
    n = H.n
    bad_thr = (1 + consts.theta) * consts.epsilon * n * n / 2
    mis_thr = (1 + consts.theta) * consts.epsilon * n * n
    rows = []
    for x in range(n):
        aud = partition_audit(H, x, t, mode=mode, seed=seed)
        rows.append(ClaimBoundsRow(x=x, bad=len(aud.bad_pairs),
                                   missing=len(aud.missing_pairs),
                                   bad_threshold=bad_thr, missing_threshold=mis_thr))
    return rows
