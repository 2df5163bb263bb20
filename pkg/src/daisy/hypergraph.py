"""r-uniform hypergraphs on labeled vertices, with array-backed edge storage.

Edges are strictly increasing r-tuples of vertex ids in [0, n).  Internally
each edge is packed into a single int64 (mixed-radix over a power-of-two
base), kept in a sorted numpy array; this keeps multi-million-edge
instances cheap to store and scan while the public surface stays tuples.
Instances are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DaisyError


def _pack_base(n: int) -> int:
    return 1 << max(1, (n - 1).bit_length()) if n >= 2 else 2


def _pack_cols(cols: Sequence[np.ndarray], base: int) -> np.ndarray:
    out = np.zeros(len(cols[0]) if len(cols) else 0, dtype=np.int64)
    for c in cols:  # lexicographic: leftmost vertex most significant
        out = out * base + c.astype(np.int64)
    return out


def _unpack_codes(codes: np.ndarray, r: int, base: int) -> np.ndarray:
    out = np.empty((len(codes), r), dtype=np.int32)
    rem = codes.copy()
    for i in range(r - 1, -1, -1):
        out[:, i] = rem % base
        rem //= base
    return out


class Hypergraph:
    """An immutable r-graph: a set of r-subsets of {0, ..., n-1}."""

    __slots__ = ("n", "r", "_base", "_codes", "_cols")

    def __init__(self, n: int, r: int, edges: Iterable[Sequence[int]] = ()):
        if r < 2:
            raise DaisyError(f"uniformity must be at least 2, got {r}")
        if n < 0:
            raise DaisyError(f"negative vertex count {n}")
        self.n = n
        self.r = r
        self._base = base = _pack_base(n)
        if r * (base.bit_length() - 1) > 62:
            raise DaisyError(f"n={n}, r={r} exceeds the packed-edge range")
        packed = []
        for e in edges:
            t = tuple(e)
            if len(t) != r or len(set(t)) != r:
                raise DaisyError(f"edge {t} does not have {r} distinct vertices")
            t = tuple(sorted(t))
            if t[0] < 0 or t[-1] >= n:
                raise DaisyError(f"edge {t} has a vertex outside [0, {n})")
            code = 0
            for v in t:
                code = code * base + v
            packed.append(code)
        self._codes = np.unique(np.asarray(packed, dtype=np.int64))
        self._cols = None

    @classmethod
    def _from_codes(cls, n: int, r: int, codes: np.ndarray) -> "Hypergraph":
        """Trusted fast path: codes must be packed for this n and deduped."""
        h = cls.__new__(cls)
        h.n = n
        h.r = r
        h._base = _pack_base(n)
        h._codes = np.sort(np.asarray(codes, dtype=np.int64))
        h._cols = None
        return h

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._codes)

    def __len__(self) -> int:
        return len(self._codes)

    def edge_array(self) -> np.ndarray:
        """(m, r) int32 array of edges, rows ascending, lexicographically sorted."""
        if self._cols is None:
            self._cols = _unpack_codes(self._codes, self.r, self._base)
        return self._cols

    def edges(self) -> Iterator[tuple[int, ...]]:
        arr = self.edge_array()
        for row in arr:
            yield tuple(int(v) for v in row)

    def __contains__(self, edge) -> bool:
        t = tuple(sorted(edge))
        if len(t) != self.r:
            return False
        code = 0
        for v in t:
            if not 0 <= v < self.n:
                return False
            code = code * self._base + v
        i = int(np.searchsorted(self._codes, code))
        return i < len(self._codes) and self._codes[i] == code

    def __eq__(self, other) -> bool:
        return (isinstance(other, Hypergraph) and self.n == other.n
                and self.r == other.r and np.array_equal(self._codes, other._codes))

    def __hash__(self):
        return hash((self.n, self.r, self._codes.tobytes()))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, r={self.r}, m={self.m})"

    # -- degrees and codegrees ----------------------------------------------

    def degrees(self) -> np.ndarray:
        """Per-vertex edge counts; sums to r*m."""
        arr = self.edge_array()
        if self.m == 0:
            return np.zeros(self.n, dtype=np.int64)
        return np.bincount(arr.ravel(), minlength=self.n).astype(np.int64)

    def codegree(self, S: Sequence[int]) -> int:
        """Number of edges containing the (r-1)-set S."""
        S = tuple(sorted(S))
        if len(S) != self.r - 1 or len(set(S)) != len(S):
            raise DaisyError(f"codegree needs an (r-1)-set, got {S}")
        arr = self.edge_array()
        if self.m == 0:
            return 0
        mask = np.ones(self.m, dtype=bool)
        for s in S:
            mask &= (arr == s).any(axis=1)
        return int(mask.sum())

    def _subset_counts(self) -> tuple[np.ndarray, np.ndarray]:
        """Packed (r-1)-subset codes appearing in edges, with multiplicities."""
        arr = self.edge_array()
        parts = []
        for drop in range(self.r):
            cols = [arr[:, i] for i in range(self.r) if i != drop]
            parts.append(_pack_cols(cols, self._base))
        allc = np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
        return np.unique(allc, return_counts=True)

    def positive_codegree_values(self) -> np.ndarray:
        """Sorted distinct codegrees over (r-1)-sets with positive codegree."""
        if self.m == 0:
            return np.empty(0, dtype=np.int64)
        _, counts = self._subset_counts()
        return np.unique(counts)

    def positive_min_codegree(self) -> int | None:
        """Minimum positive (r-1)-set codegree, or None when edgeless."""
        vals = self.positive_codegree_values()
        return int(vals[0]) if len(vals) else None

    # -- links ---------------------------------------------------------------

    def link_graph(self, S: Sequence[int]) -> "Graph":
        """The 2-graph of pairs {x, y} with S + {x, y} an edge, |S| = r-2.

        Returned on the full vertex set [0, n); the vertices of S are
        isolated in it by construction.
        """
        S = tuple(sorted(S))
        if len(S) != self.r - 2 or len(set(S)) != len(S):
            raise DaisyError(f"link needs an (r-2)-set, got {S}")
        for s in S:
            if not 0 <= s < self.n:
                raise DaisyError(f"vertex {s} out of range")
        arr = self.edge_array()
        if self.m == 0:
            return Graph(self.n, ())
        mask = np.ones(self.m, dtype=bool)
        for s in S:
            mask &= (arr == s).any(axis=1)
        rows = arr[mask]
        sset = set(S)
        pairs = []
        for row in rows:
            rest = [int(v) for v in row if int(v) not in sset]
            pairs.append((rest[0], rest[1]))
        return Graph(self.n, pairs)

    def vertex_link(self, v: int) -> "Hypergraph":
        """The (r-1)-graph {e - {v} : v in e}, on the same vertex ids."""
        if not 0 <= v < self.n:
            raise DaisyError(f"vertex {v} out of range")
        if self.r == 2:
            raise DaisyError("vertex link of a 2-graph is not a hypergraph")
        arr = self.edge_array()
        mask = (arr == v).any(axis=1)
        rows = arr[mask]
        edges = [tuple(int(x) for x in row if x != v) for row in rows]
        return Hypergraph(self.n, self.r - 1, edges)

    # -- global quantities -----------------------------------------------------

    def edge_density(self) -> Fraction:
        """Exact m / C(n, r)."""
        if self.n < self.r:
            raise DaisyError(f"density undefined for n={self.n} < r={self.r}")
        return Fraction(self.m, comb(self.n, self.r))

    def blow_up(self, sizes: Sequence[int]) -> "Hypergraph":
        """Replace vertex v by a class of sizes[v] clones; edges become all
        transversal r-sets over original edges.  Class of v occupies the
        contiguous id range starting at sum(sizes[:v])."""
        sizes = list(sizes)
        if len(sizes) != self.n:
            raise DaisyError(f"need {self.n} class sizes, got {len(sizes)}")
        if any((not isinstance(s, (int, np.integer))) or s <= 0 for s in sizes):
            raise DaisyError("class sizes must be positive integers")
        starts = np.concatenate(([0], np.cumsum(sizes)))
        new_n = int(starts[-1])
        new_base = _pack_base(new_n)
        if self.r * (new_base.bit_length() - 1) > 62:
            raise DaisyError(f"blow-up to n={new_n} exceeds the packed-edge range")
        arr = self.edge_array()
        chunks = []
        for row in arr:
            block = np.zeros((), dtype=np.int64)
            for v in row:
                v = int(v)
                cls = starts[v] + np.arange(sizes[v], dtype=np.int64)
                block = block[..., None] * new_base + cls
            chunks.append(block.ravel())
        codes = np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)
        return Hypergraph._from_codes(new_n, self.r, np.sort(codes))

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image under the vertex relabeling v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise DaisyError("not a permutation of the vertex set")
        p = np.asarray(perm, dtype=np.int64)
        arr = p[self.edge_array()]
        arr.sort(axis=1)
        cols = [arr[:, i] for i in range(self.r)]
        return Hypergraph._from_codes(self.n, self.r, _pack_cols(cols, self._base))

    def canonical(self) -> "Hypergraph":
        """Canonically relabeled copy; equal for isomorphic inputs."""
        from .canon import canonical_relabeling
        return self.relabel(canonical_relabeling(list(self.edges()), self.n, self.r))


def turan_graph_edges(N: int, t: int) -> int:
    """Edge count of the balanced complete t-partite graph on N vertices."""
    if t <= 0:
        raise DaisyError(f"part count must be positive, got {t}")
    if N < 0:
        raise DaisyError(f"negative vertex count {N}")
    small, extra = divmod(N, t)
    inside = extra * comb(small + 1, 2) + (t - extra) * comb(small, 2)
    return comb(N, 2) - inside


@dataclass(frozen=True)
class DaisyPattern:
    """The forbidden pattern with uniformity r: a common (r-2)-set attached
    to every edge of a t-clique.  It has t + r - 2 vertices and t(t-1)/2
    edges; testing for it reduces to K_t searches in (r-2)-set links."""

    r: int
    t: int

    def __post_init__(self):
        if self.r < 2:
            raise DaisyError(f"uniformity must be at least 2, got {self.r}")
        if self.t < 2:
            raise DaisyError(f"clique size must be at least 2, got {self.t}")

    @property
    def vertex_count(self) -> int:
        return self.t + self.r - 2

    @property
    def edge_count(self) -> int:
        return self.t * (self.t - 1) // 2


class Graph:
    """A 2-graph with per-vertex bitset adjacency (Python ints as bitsets)."""

    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int, pairs: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise DaisyError(f"negative vertex count {n}")
        self.n = n
        rows = [0] * n
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise DaisyError(f"bad edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.rows = rows
        self.m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def from_hypergraph(cls, H: Hypergraph) -> "Graph":
        if H.r != 2:
            raise DaisyError("only 2-graphs convert to Graph")
        return cls(H.n, H.edges())

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, 2, self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                shift = (row & -row).bit_length() - 1
                v += shift
                yield (u, v)
                row >>= shift + 1
                v += 1

    def nonisolated(self) -> list[int]:
        return [v for v in range(self.n) if self.rows[v]]

    def edges_inside(self, vertices: Iterable[int]) -> int:
        """Number of edges with both endpoints in the given vertex set."""
        mask = 0
        for v in vertices:
            mask |= 1 << v
        total = 0
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            total += (self.rows[v] & mask).bit_count()
        return total // 2

    def words(self) -> np.ndarray:
        """(n, ceil(n/64)) uint64 adjacency matrix for the compiled kernels."""
        W = max(1, (self.n + 63) // 64)
        out = np.zeros((self.n, W), dtype=np.uint64)
        for v in range(self.n):
            row = self.rows[v]
            w = 0
            while row:
                out[v, w] = row & 0xFFFFFFFFFFFFFFFF
                row >>= 64
                w += 1
        return out

    def subgraph_rows(self, vertices: Sequence[int]) -> list[int]:
        """Adjacency bitsets of the induced subgraph, reindexed 0..len-1."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        out = [0] * len(vs)
        for i, v in enumerate(vs):
            row = self.rows[v]
            acc = 0
            for u, j in pos.items():
                if (row >> u) & 1:
                    acc |= 1 << j
            out[i] = acc
        return out

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with contiguous parts of the given sizes."""
    n = sum(sizes)
    pairs = []
    start = 0
    bounds = []
    for s in sizes:
        bounds.append((start, start + s))
        start += s
    for i, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[i + 1:]:
            for u in range(a0, a1):
                for v in range(b0, b1):
                    pairs.append((u, v))
    return Graph(n, pairs)


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    return Hypergraph(n, r, combinations(range(n), r))
