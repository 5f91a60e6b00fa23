"""Seeded random graphs, moves and compatible-pair instances for property suites."""

from __future__ import annotations

import random

from .game import BuilderMove, GameState, intermediate_graph
from .graph import Graph, edge
from .strategies import SupportedCopy


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    return Graph(range(n), ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def random_matching(rng: random.Random, g: Graph, p: float = 0.7):
    es = g.sorted_edges()
    rng.shuffle(es)
    used, m = set(), []
    for u, v in es:
        if u not in used and v not in used and rng.random() < p:
            m.append((u, v))
            used |= {u, v}
    return tuple(sorted(m))


def random_move(rng: random.Random, s: GameState) -> BuilderMove:
    m = random_matching(rng, s.graph)
    plus = intermediate_graph(s, BuilderMove(m, (frozenset(), frozenset())))
    p0, p1 = set(), set()
    for e in plus.sorted_edges():
        (p0 if rng.random() < 0.5 else p1).add(e)
    return BuilderMove(m, (frozenset(p0), frozenset(p1)))


def planted_compatible_pair(rng: random.Random, r: int, extra: int = 4, p: float = 0.3):
    """A random host holding two compatible supported ``K_r`` copies.

    Cores and support endpoints are disjoint vertex blocks.  Noise edges are
    added with probability ``p``; they cannot spoil the planted supports,
    which stay a matching whatever else is present.
    """
    n = 4 * r + extra
    perm = list(range(n))
    rng.shuffle(perm)
    core1, core2 = perm[:r], perm[r:2 * r]
    sup1, sup2 = perm[2 * r:3 * r], perm[3 * r:4 * r]
    es = set()
    for core in (core1, core2):
        es |= {edge(a, b) for i, a in enumerate(core) for b in core[i + 1:]}
    s1 = tuple(sorted(edge(c, x) for c, x in zip(core1, sup1)))
    s2 = tuple(sorted(edge(c, x) for c, x in zip(core2, sup2)))
    es |= set(s1) | set(s2)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                es.add((u, v))
    g = Graph(range(n), es)
    return g, SupportedCopy(frozenset(core1), s1, r), SupportedCopy(frozenset(core2), s2, r)
