"""Copies of a pattern graph inside a host (non-induced subgraph embeddings).

A *copy* is a subgraph of the host isomorphic to the pattern, so embeddings
that differ by an automorphism of the pattern describe the same copy and are
reported once.
"""

from __future__ import annotations

from typing import NamedTuple

from .cliques import iter_cliques
from .graph import Edge, Graph, edge, is_complete


class Copy(NamedTuple):
    mapping: tuple[tuple[int, int], ...]  # (pattern vertex, host vertex) pairs
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)


def _copy(pattern: Graph, phi: dict[int, int]) -> Copy:
    return Copy(
        tuple(sorted(phi.items())),
        frozenset(phi.values()),
        frozenset(edge(phi[u], phi[v]) for u, v in pattern.edges),
    )


def _pattern_order(pattern: Graph) -> list[int]:
    # BFS from the highest-degree vertex so every later vertex has a mapped neighbour
    order: list[int] = []
    seen: set[int] = set()
    rest = sorted(pattern.vertices, key=lambda v: (-pattern.degree(v), v))
    for root in rest:
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(pattern.neighbors(v), key=lambda u: (-pattern.degree(u), u)):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


def find_copies(g: Graph, pattern: Graph, cap: int | None = None) -> list[Copy]:
    """Up to ``cap`` distinct copies of ``pattern`` in ``g``, deterministic order."""
    if cap is not None and cap < 1:
        raise ValueError("cap must be >= 1")
    out: list[Copy] = []
    if pattern.n == 0:
        return [Copy((), frozenset(), frozenset())]
    if is_complete(pattern):
        pv = pattern.vertices
        for c in iter_cliques(g, pattern.n):
            out.append(_copy(pattern, dict(zip(pv, c))))
            if cap is not None and len(out) >= cap:
                break
        return out

    order = _pattern_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    back = [[u for u in pattern.neighbors(v) if pos[u] < pos[v]] for v in order]
    pdeg = [pattern.degree(v) for v in order]
    hadj = g.adj
    hverts = g.vertices
    phi: dict[int, int] = {}
    used: set[int] = set()
    seen: set[tuple[frozenset, frozenset]] = set()

    def rec(i):
        if i == len(order):
            c = _copy(pattern, phi)
            key = (c.vertices, c.edges)
            if key not in seen:
                seen.add(key)
                out.append(c)
            return cap is not None and len(out) >= cap
        v = order[i]
        if back[i]:
            cands = set(hadj[phi[back[i][0]]])
            for u in back[i][1:]:
                cands &= hadj[phi[u]]
            cands = sorted(cands)
        else:
            cands = hverts
        for x in cands:
            if x in used or len(hadj[x]) < pdeg[i]:
                continue
            phi[v] = x
            used.add(x)
            stop = rec(i + 1)
            used.discard(x)
            del phi[v]
            if stop:
                return True
        return False

    rec(0)
    return out


def contains(g: Graph, pattern: Graph) -> bool:
    return bool(find_copies(g, pattern, cap=1))


def two_edge_disjoint_copies(g: Graph, pattern: Graph) -> tuple[Copy, Copy] | None:
    """First pair (in copy order) of copies with disjoint edge images."""
    copies = find_copies(g, pattern)
    for i, a in enumerate(copies):
        for b in copies[i + 1:]:
            if not (a.edges & b.edges):
                return a, b
    return None


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """A vertex bijection ``h -> g`` preserving edges, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return None
    found = find_copies(g, h, cap=1)
    return found[0].as_dict() if found else None
