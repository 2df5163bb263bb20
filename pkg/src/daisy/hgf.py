"""HGF: a plain-text exchange format for uniform hypergraphs.

Line 1 holds ``n r`` in decimal; every following non-blank line is either a
``#``-prefixed comment or one edge as r space-separated ascending 0-based
vertex ids.  The canonical writer emits edges sorted lexicographically, so
write -> read -> write round-trips are bit-exact.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Iterable

from .errors import FormatError
from .hypergraph import Hypergraph


def loads(text: str) -> Hypergraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise FormatError(f"line {lineno}: header must be 'n r'")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header") from None
            continue
        try:
            edge = tuple(int(f) for f in fields)
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex id") from None
        n, r = header
        if len(edge) != r:
            raise FormatError(f"line {lineno}: expected {r} vertex ids, got {len(edge)}")
        if list(edge) != sorted(set(edge)):
            raise FormatError(f"line {lineno}: vertex ids must be strictly increasing")
        if edge[0] < 0 or edge[-1] >= n:
            raise FormatError(f"line {lineno}: vertex id outside [0, {n})")
        edges.append(edge)
    if header is None:
        raise FormatError("empty file: missing 'n r' header")
    n, r = header
    if r < 2:
        raise FormatError(f"uniformity {r} out of range")
    if n < 0:
        raise FormatError(f"negative vertex count {n}")
    return Hypergraph(n, r, edges)


def dumps(H: Hypergraph, comments: Iterable[str] = ()) -> str:
    out = io.StringIO()
    for c in comments:
        for line in str(c).splitlines() or [""]:
            out.write(f"# {line}\n" if line else "#\n")
    out.write(f"{H.n} {H.r}\n")
    for edge in sorted(H.edges()):
        out.write(" ".join(str(v) for v in edge) + "\n")
    return out.getvalue()


def read(path) -> Hypergraph:
    return loads(Path(path).read_text(encoding="ascii"))


def write(H: Hypergraph, path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(dumps(H, comments), encoding="ascii")
