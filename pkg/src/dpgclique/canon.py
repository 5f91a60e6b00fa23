"""Canonical forms by colour refinement plus individualization search.

The search explores every branch of the individualization-refinement tree
except branches on twins: if two vertices of the target cell have the same
neighbourhood apart from each other, swapping them is an automorphism that
fixes everything individualized so far, so their subtrees yield the same
leaves.  The canonical key is the lexicographically smallest relabeled edge
list over all leaves.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph

Key = tuple


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nbrs[v]]))) for v in range(len(nbrs))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _twin_classes(nbrs: list[list[int]]) -> list[int]:
    n = len(nbrs)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    open_nb: dict[frozenset, int] = {}
    closed_nb: dict[frozenset, int] = {}
    for v in range(n):
        for table, key in ((open_nb, frozenset(nbrs[v])), (closed_nb, frozenset(nbrs[v]) | {v})):
            if key in table:
                parent[find(v)] = find(table[key])
            else:
                table[key] = v
    return [find(v) for v in range(n)]


def canonical_key_dense(n: int, edges: Iterable[tuple[int, int]]) -> Key:
    """Canonical key of a graph on vertices ``0..n-1`` (isolated ones included)."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    elist = []
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
        elist.append((u, v))
    if not elist:
        return (n, ())
    twins = _twin_classes(nbrs)
    best: list = [None]

    def leaf(colors):
        es = sorted((a, b) if a < b else (b, a) for a, b in ((colors[u], colors[v]) for u, v in elist))
        key = tuple(es)
        if best[0] is None or key < best[0]:
            best[0] = key

    def search(colors):
        colors = _refine(nbrs, colors)
        counts: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            counts.setdefault(c, []).append(v)
        if len(counts) == n:
            leaf(colors)
            return
        cell = min(c for c, vs in counts.items() if len(vs) > 1)
        tried = set()
        for v in counts[cell]:
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            search([2 * c if u == v else 2 * c + 1 for u, c in enumerate(colors)])

    search([0] * n)
    return (n, best[0])


def canonical_key(g: Graph) -> Key:
    """Canonical key of ``g`` including isolated vertices."""
    index = {v: i for i, v in enumerate(g.vertices)}
    return canonical_key_dense(g.n, ((index[u], index[v]) for u, v in g.edges))


def canonical_form(g: Graph) -> Key:
    """Isomorphism-invariant key of ``g`` with isolated vertices removed.

    Isolated vertices never become matching endpoints, so they can never
    gain an edge; graphs that differ only in them play identically.
    """
    touched = sorted({x for e in g.edges for x in e})
    index = {v: i for i, v in enumerate(touched)}
    return canonical_key_dense(len(touched), ((index[u], index[v]) for u, v in g.edges))


def isomorphic(g1: Graph, g2: Graph, ignore_isolated: bool = True) -> bool:
    if ignore_isolated:
        return canonical_form(g1) == canonical_form(g2)
    return canonical_key(g1) == canonical_key(g2)


def generate_graphs(
    n: int,
    max_edges: int | None = None,
    triangle_free: bool = False,
    connected: bool = False,
) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Built by edge augmentation with canonical deduplication; every graph with
    ``m`` edges arises from some graph with ``m - 1`` edges.  Triangle-freeness
    is closed under edge deletion, so it is enforced during augmentation.
    """
    top = n * (n - 1) // 2 if max_edges is None else min(max_edges, n * (n - 1) // 2)
    level = {canonical_key_dense(n, ()): frozenset()}
    found = [frozenset()]
    for _ in range(top):
        nxt: dict[Key, frozenset] = {}
        for es in level.values():
            nb = [set() for _ in range(n)]
            for u, v in es:
                nb[u].add(v)
                nb[v].add(u)
            for u in range(n):
                for v in range(u + 1, n):
                    if v in nb[u] or (triangle_free and nb[u] & nb[v]):
                        continue
                    new = es | {(u, v)}
                    key = canonical_key_dense(n, new)
                    if key not in nxt:
                        nxt[key] = new
        if not nxt:
            break
        found.extend(nxt.values())
        level = nxt
    graphs = [Graph(range(n), sorted(es)) for es in found]
    if connected:
        graphs = [g for g in graphs if _is_connected(g)]
    return graphs


def _is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n
