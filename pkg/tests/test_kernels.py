"""Compiled and pure kernels must produce identical outputs."""

import random
from itertools import combinations

import numpy as np
import pytest

from daisy import _kernels
from daisy.canon import colex_code, word_of
from daisy.hypergraph import Graph

IMPLS = _kernels.implementations()
needs_compiled = pytest.mark.skipif("compiled" not in IMPLS,
                                    reason="compiled kernels not built")


def _random_triples(n, p, seed):
    rng = random.Random(seed)
    return np.array([e for e in combinations(range(n), 3) if rng.random() < p]
                    or [(0, 1, 2)], dtype=np.int32)


@needs_compiled
@pytest.mark.parametrize("seed", range(8))
def test_color_suspects_agree(seed):
    n = 9 + seed % 3
    tri = _random_triples(n, 0.3, seed)
    for k in (3, 4, 5):
        got = {name: mod.color_suspects_r3(tri, n, k).tolist()
               for name, mod in IMPLS.items()}
        assert got["pure"] == got["compiled"]


@needs_compiled
def test_color_suspects_windows_agree():
    n = 11
    tri = _random_triples(n, 0.35, 424242)
    for k in (3, 4):
        full = IMPLS["pure"].color_suspects_r3(tri, n, k).tolist()
        for name, mod in IMPLS.items():
            bounds = [0, 3, 7, n]
            windowed = []
            for lo, hi in zip(bounds, bounds[1:]):
                windowed += mod.color_suspects_r3(tri, n, k, lo, hi).tolist()
            assert windowed == full, (name, k)


@needs_compiled
@pytest.mark.parametrize("seed", range(8))
def test_link_rows_agree(seed):
    n = 8
    tri = _random_triples(n, 0.35, 100 + seed)
    for v in range(n):
        rows = {name: mod.link_rows_r3(tri, n, v)
                for name, mod in IMPLS.items()}
        assert (rows["pure"] == rows["compiled"]).all()


@needs_compiled
@pytest.mark.parametrize("seed", range(10))
def test_max_cut_agree(seed):
    rng = random.Random(seed)
    n = rng.randrange(2, 13)
    g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
    words = g.words()
    for t in (2, 3, 4):
        got = {name: mod.max_cut_exact(words, n, t, 10 ** 8)
               for name, mod in IMPLS.items()}
        for field in range(4):
            a = got["pure"][field]
            b = got["compiled"][field]
            if isinstance(a, np.ndarray):
                assert (a == b).all()
            else:
                assert a == b


@needs_compiled
@pytest.mark.parametrize("seed", range(12))
def test_is_min_labeled_agree(seed):
    rng = random.Random(40 + seed)
    n = rng.randrange(4, 8)
    edges = sorted((e for e in combinations(range(n), 3) if rng.random() < 0.4),
                   key=lambda e: tuple(reversed(e)))
    if not edges:
        edges = [(0, 1, 2)]
    arr = np.asarray(edges, dtype=np.int32)
    ref = np.asarray(word_of(edges, n), dtype=np.int64)
    got = {name: mod.is_min_labeled_arr(arr, n, 3, ref)
           for name, mod in IMPLS.items()}
    assert got["pure"] == got["compiled"]


def test_max_cut_matches_brute_force_enumeration():
    # oracle: all t^n assignments, taking the lexicographically least maximizer
    from itertools import product
    rng = random.Random(99)
    impl = _kernels.active()
    for _ in range(15):
        n = rng.randrange(2, 8)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        words = g.words()
        for t in (2, 3):
            best_val, best_assign = -1, None
            for assign in product(range(t), repeat=n):
                cross = sum(1 for u, v in g.edges() if assign[u] != assign[v])
                if cross > best_val:
                    best_val, best_assign = cross, assign
            got_val, got_assign, _, complete = impl.max_cut_exact(words, n, t, 10 ** 8)
            assert complete and got_val == best_val
            # lex-least maximizer: enumerate assignments in lex order
            for assign in product(range(t), repeat=n):
                cross = sum(1 for u, v in g.edges() if assign[u] != assign[v])
                if cross == best_val:
                    assert list(assign) == got_assign.tolist()
                    break


def test_max_cut_node_cap_reports_incomplete():
    g = Graph(12, list(combinations(range(12), 2)))
    impl = _kernels.active()
    _, _, _, complete = impl.max_cut_exact(g.words(), 12, 3, 10)
    assert not complete
