"""Seeded random instance generators for the property checks.

Everything here is driven by an explicit integer seed so sampled checks
are reproducible; the seed belongs in any report produced from them.
"""

from __future__ import annotations

import random
from itertools import combinations

from .certify import find_clique
from .hypergraph import DaisyPattern, Graph, Hypergraph


def rng(seed: int, tag: int = 0) -> random.Random:
    return random.Random(seed * 1_000_003 + tag)


def random_graph(n: int, p: float, r: random.Random) -> Graph:
    pairs = [e for e in combinations(range(n), 2) if r.random() < p]
    return Graph(n, pairs)


def random_clique_free_graph(n: int, t: int, p: float, r: random.Random) -> Graph:
    """Random graph repaired to be K_{t+1}-free by deleting one edge of
    each clique found, until none remains."""
    pairs = {e for e in combinations(range(n), 2) if r.random() < p}
    while True:
        g = Graph(n, pairs)
        clique = find_clique(g, t + 1)
        if clique is None:
            return g
        u, v = sorted(r.sample(list(clique), 2))
        pairs.discard((u, v))


def random_near_turan_graph(t: int, r: random.Random,
                            max_n: int = 20) -> Graph:
    """Complete t-partite graph with near-balanced shuffled parts, minus a
    few random cross edges.  Candidate inputs for the degree-forced
    partiteness check; the caller filters on the degree hypothesis."""
    n = r.randrange(max(t + 2, 8), max_n + 1)
    sizes = [n // t + (1 if i < n % t else 0) for i in range(t)]
    labels = list(range(n))
    r.shuffle(labels)
    parts = []
    at = 0
    for s in sizes:
        parts.append(labels[at:at + s])
        at += s
    pairs = set()
    for i in range(t):
        for j in range(i + 1, t):
            for u in parts[i]:
                for v in parts[j]:
                    pairs.add((u, v) if u < v else (v, u))
    for _ in range(r.randrange(0, 3)):
        if pairs:
            pairs.discard(r.choice(sorted(pairs)))
    return Graph(n, pairs)


def random_daisy_free_hypergraph(n: int, t: int, p: float,
                                 r: random.Random) -> Hypergraph:
    """Random 3-graph repaired to avoid the (3, t+1)-daisy: while a witness
    exists, delete one random edge of the witnessed daisy."""
    from .certify import is_daisy_free
    pattern = DaisyPattern(3, t + 1)
    edges = {e for e in combinations(range(n), 3) if r.random() < p}
    while True:
        h = Hypergraph(n, 3, edges)
        rep = is_daisy_free(h, pattern)
        if rep.verdict:
            return h
        S = tuple(rep.witness["S"])
        clique = rep.witness["clique"]
        u, v = sorted(r.sample(list(clique), 2))
        edges.discard(tuple(sorted(S + (u, v))))
