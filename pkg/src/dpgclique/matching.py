"""Matchings: validation, enumeration, cross graphs and matching number."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvalidInput
from .graph import Edge, Graph, edge, format_edge

Matching = tuple[Edge, ...]


def is_matching(edges: Iterable[Edge]) -> bool:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def check_matching(g: Graph, m: Iterable[tuple[int, int]]) -> Matching:
    """Normalize ``m`` and verify it is a matching of ``g``."""
    norm = tuple(sorted(edge(u, v) for u, v in m))
    if len(set(norm)) != len(norm):
        raise InvalidInput("matching lists an edge twice")
    for e in norm:
        if e not in g.edges:
            raise InvalidInput(f"matching edge {format_edge(e)} is not an edge of the graph")
    if not is_matching(norm):
        raise InvalidInput("edges of the matching share an endpoint")
    return norm


def endpoints_of(m: Iterable[Edge]) -> frozenset[int]:
    return frozenset(x for e in m for x in e)


def cross_graph(g: Graph, m: Iterable[Edge]) -> Graph:
    """``G[V(M)] - M``: induced subgraph on the matched endpoints minus ``M``."""
    m = check_matching(g, m)
    sub = g.induced(endpoints_of(m))
    return Graph._make(sub.vertices, sub.edges - frozenset(m), sub.provenance_map, sub.labels)


def enumerate_matchings(g: Graph, min_size: int = 0, max_size: int | None = None) -> Iterator[Matching]:
    """Yield every matching with ``min_size <= |M| <= max_size`` exactly once.

    Order is lexicographic in the positions of the edges within
    ``g.sorted_edges()``, so the empty matching (if in range) comes first.
    """
    if min_size < 0 or (max_size is not None and max_size < min_size):
        raise InvalidInput("need 0 <= min_size <= max_size")
    es = g.sorted_edges()
    cap = len(es) if max_size is None else max_size
    chosen: list[Edge] = []
    used: set[int] = set()

    def rec(start):
        if len(chosen) >= min_size:
            yield tuple(chosen)
        if len(chosen) == cap:
            return
        for i in range(start, len(es)):
            u, v = es[i]
            if u in used or v in used:
                continue
            chosen.append(es[i])
            used.add(u)
            used.add(v)
            yield from rec(i + 1)
            chosen.pop()
            used.discard(u)
            used.discard(v)

    yield from rec(0)


def _bitmask_adjacency(g: Graph) -> list[int]:
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * g.n
    for u, v in g.edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    return adj


def matching_number(g: Graph) -> int:
    """Maximum matching size by exact branching on the lowest live vertex."""
    adj = tuple(_bitmask_adjacency(g))
    return _nu(adj, (1 << g.n) - 1)


def _nu(adj: tuple[int, ...], alive: int) -> int:
    @lru_cache(maxsize=None)
    def rec(alive):
        # drop vertices with no live neighbour
        while alive:
            low = alive & -alive
            v = low.bit_length() - 1
            nb = adj[v] & alive
            if nb:
                break
            alive ^= low
        else:
            return 0
        rest = alive & ~low
        if nb & (nb - 1) == 0:
            # a degree-one vertex can always be matched to its neighbour
            return 1 + rec(rest & ~nb)
        best = rec(rest)
        while nb:
            b = nb & -nb
            nb ^= b
            best = max(best, 1 + rec(rest & ~b))
        return best

    return rec(alive)
