"""Clique enumeration, clique number and vertex-disjoint clique packing."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph


def maximal_cliques(g: Graph) -> Iterator[frozenset[int]]:
    """Bron-Kerbosch with Tomita pivoting."""
    adj = g.adj

    def expand(r, p, x):
        if not p and not x:
            yield frozenset(r)
            return
        pivot = max(p | x, key=lambda u: (len(adj[u] & p), -u))
        for v in sorted(p - adj[pivot]):
            yield from expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    if g.n:
        yield from expand(set(), set(g.vertices), set())


def clique_number(g: Graph) -> int:
    return max((len(c) for c in maximal_cliques(g)), default=0)


def iter_cliques(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """All ``k``-cliques as increasing vertex tuples, in lexicographic order."""
    if k <= 0:
        yield ()
        return
    adj = g.adj

    def rec(clique, cands):
        if len(clique) == k:
            yield tuple(clique)
            return
        need = k - len(clique)
        if len(cands) < need:
            return
        for v in cands:
            nxt = [u for u in cands if u > v and u in adj[v]]
            if len(nxt) < need - 1:
                continue
            clique.append(v)
            yield from rec(clique, nxt)
            clique.pop()

    yield from rec([], [v for v in g.vertices if len(adj[v]) >= k - 1])


def has_clique(g: Graph, k: int) -> bool:
    return next(iter_cliques(g, k), None) is not None


def clique_packing_number(g: Graph, r: int) -> int:
    """Maximum number of pairwise vertex-disjoint ``r``-cliques.

    Exact backtracking over the clique list: branch on the lowest vertex
    still covered by some clique, either leaving it unused or taking one of
    the cliques through it.
    """
    if r < 1:
        raise ValueError("r must be positive")
    index = {v: i for i, v in enumerate(g.vertices)}
    masks = tuple(sorted({sum(1 << index[v] for v in c) for c in iter_cliques(g, r)}))
    if not masks:
        return 0

    @lru_cache(maxsize=None)
    def rec(alive):
        live = [c for c in masks if c & alive == c]
        if not live:
            return 0
        cover = 0
        for c in live:
            cover |= c
        low = cover & -cover
        best = rec(alive & ~low)
        for c in live:
            if c & low:
                best = max(best, 1 + rec(alive & ~c))
        return best

    return rec((1 << g.n) - 1)
