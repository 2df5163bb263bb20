"""Canonical labeling of small uniform hypergraphs by minimum-word search.

A labeled edge set is encoded as its *word*: the sorted tuple of packed
edge codes, where an edge {v_0 < ... < v_{r-1}} packs to sum(v_i * n**i).
That packing compares edges colexicographically, so when vertices are
assigned new labels 0, 1, 2, ... one at a time, every edge completed at
label p sorts after every edge completed earlier -- the word grows append
only, which lets the relabeling search prune on prefixes.

The canonical form of a hypergraph is the lexicographically least word
over all n! relabelings; the search below is branch-and-bound over label
assignments with that prefix pruning.  Exponential in the worst case, so
meant for search-scale instances (n up to ~10).
"""

from __future__ import annotations

from typing import Sequence

Edge = tuple[int, ...]


def colex_code(edge: Edge, n: int) -> int:
    c = 0
    for i, v in enumerate(edge):
        c += v * n ** i
    return c


def word_of(edges: Sequence[Edge], n: int) -> tuple[int, ...]:
    """The word of the edge set under its current labeling."""
    return tuple(sorted(colex_code(e, n) for e in edges))


def _incident_lists(edges: Sequence[Edge], n: int) -> list[list[Edge]]:
    inc: list[list[Edge]] = [[] for _ in range(n)]
    for e in edges:
        for v in e:
            inc[v].append(e)
    return inc


def is_min_labeled(edges: Sequence[Edge], n: int,
                   ref_word: tuple[int, ...] | None = None) -> bool:
    """True iff no relabeling yields a strictly smaller word.

    ``ref_word`` may be passed when the caller already has the current
    word (it must equal word_of(edges, n)).
    """
    k = len(edges)
    if k == 0:
        return True
    ref = ref_word if ref_word is not None else word_of(edges, n)
    incident = _incident_lists(edges, n)
    new_of_old = [-1] * n
    powers = [n ** i for i in range(max(len(e) for e in edges))]

    def dfs(p: int, wi: int) -> bool:
        # returns True once a strictly smaller word exists
        if wi == k or p == n:
            return False
        for u in range(n):
            if new_of_old[u] >= 0:
                continue
            new_of_old[u] = p
            seg = []
            for e in incident[u]:
                labels = []
                for w in e:
                    lab = new_of_old[w]
                    if lab < 0:
                        break
                    labels.append(lab)
                else:
                    labels.sort()
                    seg.append(sum(lab * powers[i] for i, lab in enumerate(labels)))
            seg.sort()
            verdict = 0
            for idx, code in enumerate(seg):
                refc = ref[wi + idx]
                if code != refc:
                    verdict = -1 if code < refc else 1
                    break
            if verdict < 0:
                new_of_old[u] = -1
                return True
            if verdict == 0 and dfs(p + 1, wi + len(seg)):
                new_of_old[u] = -1
                return True
            new_of_old[u] = -1
        return False

    return not dfs(0, 0)


def _min_word_search(edges: Sequence[Edge], n: int) -> tuple[tuple[int, ...], list[int]]:
    k = len(edges)
    identity = list(range(n))
    if k == 0:
        return (), identity
    incident = _incident_lists(edges, n)
    powers = [n ** i for i in range(max(len(e) for e in edges))]
    best_word = list(word_of(edges, n))
    best_perm = identity[:]
    new_of_old = [-1] * n
    built: list[int] = []

    def complete_rest():
        # remaining vertices carry no undetermined edges: fill positions
        # ascending for a deterministic permutation
        p = sum(1 for x in new_of_old if x >= 0)
        filled = []
        for u in range(n):
            if new_of_old[u] < 0:
                new_of_old[u] = p
                filled.append(u)
                p += 1
        if built < best_word:
            best_word[:] = built
            best_perm[:] = new_of_old
        for u in filled:
            new_of_old[u] = -1

    def dfs(p: int):
        if len(built) == k:
            complete_rest()
            return
        for u in range(n):
            if new_of_old[u] >= 0:
                continue
            new_of_old[u] = p
            seg = []
            for e in incident[u]:
                labels = []
                for w in e:
                    lab = new_of_old[w]
                    if lab < 0:
                        break
                    labels.append(lab)
                else:
                    labels.sort()
                    seg.append(sum(lab * powers[i] for i, lab in enumerate(labels)))
            seg.sort()
            built.extend(seg)
            L = len(built)
            if built <= best_word[:L]:
                dfs(p + 1)
            del built[L - len(seg):]
            new_of_old[u] = -1

    dfs(0)
    return tuple(best_word), best_perm


def canonical_word(edges: Sequence[Edge], n: int, r: int) -> tuple[int, ...]:
    """Lexicographically least word over all relabelings; an isomorphism
    invariant that is complete for fixed (n, r)."""
    word, _ = _min_word_search(edges, n)
    return word


def canonical_relabeling(edges: Sequence[Edge], n: int, r: int) -> list[int]:
    """A permutation (old id -> new id) achieving the canonical word."""
    _, perm = _min_word_search(edges, n)
    return perm
