"""Lower-bound families: projective-plane triple systems, their recursive
blow-ups, linear-independence hypergraphs over GF(q), and balanced
blow-ups of those, plus the exact density-bound formulas.

All generators are pure and emit vertices in a fixed canonical order
(points and vectors sorted by their integer encodings, blow-up classes
contiguous), so outputs are reproducible across runs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import __version__
from .errors import CapExceeded, DaisyError
from .gf import FiniteField, field_of_order, is_prime_power, rank
from .hypergraph import Hypergraph

DEFAULT_VERTEX_CAP = 400
DEFAULT_EDGE_CAP = 10 ** 7


def vertex_cap() -> int:
    return int(os.environ.get("DAISY_MAX_VERTICES", DEFAULT_VERTEX_CAP))


def edge_cap() -> int:
    return int(os.environ.get("DAISY_MAX_EDGES", DEFAULT_EDGE_CAP))


def _check_caps(n: int, m: int):
    if n > vertex_cap():
        raise CapExceeded(f"{n} vertices exceeds cap {vertex_cap()} "
                          "(override with DAISY_MAX_VERTICES)")
    if m > edge_cap():
        raise CapExceeded(f"{m} edges exceeds cap {edge_cap()} "
                          "(override with DAISY_MAX_EDGES)")


@dataclass(frozen=True)
class ConstructionLabel:
    """Provenance stamp written into HGF comment headers."""

    family: str
    params: dict = field(default_factory=dict)

    def comments(self) -> list[str]:
        items = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return [f"family: {self.family}", f"params: {items}",
                f"generator: daisy-workbench {__version__}"]


# --- projective planes ------------------------------------------------------

@dataclass(frozen=True)
class ProjectivePlane:
    """PG(2, q): points and lines are the 1- and 2-dimensional subspaces of
    GF(q)^3, both represented by the canonical vector whose first nonzero
    coordinate is 1, sorted by integer encoding."""

    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: tuple[frozenset[int], ...]
    line_through: dict  # (point id, point id) -> line id

    @property
    def m(self) -> int:
        return len(self.points)

    def line_of(self, a: int, b: int) -> int:
        return self.line_through[(a, b) if a < b else (b, a)]

    def collinear(self, a: int, b: int, c: int) -> bool:
        return c in self.lines[self.line_of(a, b)]


def _canonical_points(f: FiniteField) -> list[tuple[int, int, int]]:
    q = f.q
    pts = []
    for x in range(q):
        for y in range(q):
            for z in range(q):
                if (x, y, z) == (0, 0, 0):
                    continue
                lead = x if x else (y if y else z)
                if lead == 1:
                    pts.append((x, y, z))
    pts.sort(key=lambda p: (p[0] * q + p[1]) * q + p[2])
    return pts


def projective_plane(q: int) -> ProjectivePlane:
    f = field_of_order(q)
    pts = _canonical_points(f)
    m = q * q + q + 1
    assert len(pts) == m
    # lines carry the same canonical coordinates; incidence is a zero dot product
    duals = pts
    lines = []
    for d in duals:
        on = frozenset(
            i for i, p in enumerate(pts)
            if f.add(f.add(f.mul(p[0], d[0]), f.mul(p[1], d[1])), f.mul(p[2], d[2])) == 0
        )
        lines.append(on)
    line_through = {}
    for li, on in enumerate(lines):
        for a, b in combinations(sorted(on), 2):
            line_through[(a, b)] = li
    return ProjectivePlane(q=q, points=tuple(pts), lines=tuple(lines),
                           line_through=line_through)


def noncollinear_hypergraph(q: int) -> Hypergraph:
    """3-graph on the points of PG(2, q) whose edges are the non-collinear
    triples; exactly q^3 (q+1) (q^2+q+1) / 6 of them."""
    plane = projective_plane(q)
    m = plane.m
    _check_caps(m, q ** 3 * (q + 1) * m // 6)
    edges = [t for t in combinations(range(m), 3)
             if not plane.collinear(*t)]
    return Hypergraph(m, 3, edges)


def recursive_blowup(q: int, depth: int) -> Hypergraph:
    """Blow up the non-collinear 3-graph recursively: depth 1 is the plane
    construction itself; at depth d each vertex class is a fresh copy of
    the depth d-1 hypergraph.  Defined only at n = (q^2+q+1)^d, which
    keeps every class exactly divisible."""
    if depth < 1:
        raise DaisyError(f"depth must be at least 1, got {depth}")
    base = noncollinear_hypergraph(q)
    m = base.n
    n_final = m ** depth
    e_final = _recurrence_edges(q, depth)
    _check_caps(n_final, e_final)
    h = base
    for _ in range(depth - 1):
        inner_n = h.n
        top = base.blow_up([inner_n] * m)
        codes = [top._codes]
        inner_edges = h.edge_array().astype(np.int64)
        for cls in range(m):
            shifted = inner_edges + cls * inner_n
            cols = [shifted[:, i] for i in range(3)]
            from .hypergraph import _pack_cols
            codes.append(_pack_cols(cols, top._base))
        h = Hypergraph._from_codes(top.n, 3, np.concatenate(codes))
    return h


def _recurrence_edges(q: int, depth: int) -> int:
    """Edge count of recursive_blowup by its defining recurrence."""
    m = q * q + q + 1
    base = q ** 3 * (q + 1) * m // 6
    e = base
    for d in range(2, depth + 1):
        e = base * m ** (3 * (d - 1)) + m * e
    return e


# --- linear-independence hypergraphs over GF(q) -----------------------------

def _vectors(q: int, r: int) -> list[tuple[int, ...]]:
    """Nonzero vectors of GF(q)^r sorted by base-q integer encoding."""
    out = []
    for code in range(1, q ** r):
        coords = []
        c = code
        for _ in range(r):
            c, d = divmod(c, q)
            coords.append(d)
        out.append(tuple(reversed(coords)))
    return out


def gf_independent_hypergraph(r: int, q: int) -> Hypergraph:
    """r-graph on the q^r - 1 nonzero vectors of GF(q)^r whose edges are
    the linearly independent r-sets."""
    if r < 3:
        raise DaisyError(f"uniformity must be at least 3, got {r}")
    if is_prime_power(q) is None:
        raise DaisyError(f"{q} is not a prime power")
    f = field_of_order(q)
    vecs = _vectors(q, r)
    n = len(vecs)
    expected = 1
    for i in range(r):
        expected *= q ** r - q ** i
    for i in range(2, r + 1):
        expected //= i
    _check_caps(n, expected)
    edges = [t for t in combinations(range(n), r)
             if rank(f, [vecs[i] for i in t]) == r]
    return Hypergraph(n, r, edges)


def independent_edge_count(r: int, q: int) -> int:
    """prod_{i<r} (q^r - q^i) / r! -- the basis-counting formula."""
    num = 1
    for i in range(r):
        num *= q ** r - q ** i
    den = 1
    for i in range(2, r + 1):
        den *= i
    return num // den


def balanced_blowup_gf(r: int, q: int, N: int) -> Hypergraph:
    """Balanced blow-up of the linear-independence r-graph: every vector
    becomes a class of N clones.  Positive (r-1)-codegree is exactly
    (q^r - q^(r-1)) N."""
    if N < 1:
        raise DaisyError(f"class size must be positive, got {N}")
    base = gf_independent_hypergraph(r, q)
    _check_caps(base.n * N, base.m * N ** r)
    return base.blow_up([N] * base.n)


# --- bound formulas ----------------------------------------------------------

@dataclass(frozen=True)
class BoundsTable:
    """Exact rational density bounds for forbidden-daisy problems at clique
    parameter t (links must avoid K_{t+1})."""

    t: int
    r: int
    link_lower: Fraction          # recursive plane blow-up density, t-1 a prime power
    link_lower_applies: bool      # whether t-1 is a prime power
    link_upper: Fraction
    codeg_lower: Fraction         # blow-up positive-codegree ratio
    codeg_upper: Fraction

    def as_dict(self) -> dict:
        return {
            "t": self.t,
            "r": self.r,
            "link_lower": str(self.link_lower),
            "link_lower_applies": self.link_lower_applies,
            "link_upper": str(self.link_upper),
            "codeg_lower": str(self.codeg_lower),
            "codeg_upper": str(self.codeg_upper),
            "link_lower_decimal": float(self.link_lower),
            "link_upper_decimal": float(self.link_upper),
            "codeg_lower_decimal": float(self.codeg_lower),
            "codeg_upper_decimal": float(self.codeg_upper),
        }


def bounds_table(t: int, r: int = 3) -> BoundsTable:
    if t < 2:
        raise DaisyError(f"t must be at least 2, got {t}")
    if r < 3:
        raise DaisyError(f"r must be at least 3, got {r}")
    s = t - 1
    return BoundsTable(
        t=t,
        r=r,
        link_lower=Fraction(s * s, t * t - t + 2),
        link_lower_applies=is_prime_power(s) is not None,
        link_upper=1 - Fraction(1, t) - Fraction(1, 12 * t * t),
        codeg_lower=Fraction(s ** r - s ** (r - 1), s ** r - 1) if s >= 2 else Fraction(0),
        codeg_upper=1 - Fraction(1, t) - Fraction(1, 36 * t * t),
    )


# --- family dispatch (CLI) ---------------------------------------------------

def build_family(family: str, **params) -> tuple[Hypergraph, ConstructionLabel]:
    if family == "pg-noncollinear":
        q = params["q"]
        return noncollinear_hypergraph(q), ConstructionLabel(family, {"q": q})
    if family == "pg-recursive":
        q, depth = params["q"], params["depth"]
        return recursive_blowup(q, depth), ConstructionLabel(family, {"q": q, "depth": depth})
    if family == "gf-independent":
        r, q = params["r"], params["q"]
        return gf_independent_hypergraph(r, q), ConstructionLabel(family, {"r": r, "q": q})
    if family == "gf-blowup":
        r, q, N = params["r"], params["q"], params["N"]
        return balanced_blowup_gf(r, q, N), ConstructionLabel(family, {"r": r, "q": q, "N": N})
    raise DaisyError(f"unknown family {family!r}")
