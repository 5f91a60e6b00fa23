"""Bounded exact minimax search for forcing times.

``wins(G, d)`` holds when the target already sits in ``G`` or when some
Builder move (matching plus bipartition of the intermediate edges) leaves a
graph with ``wins(., d - 1)`` on *both* sides.  The forcing time is the least
``d`` with ``wins(G, d)``; the search deepens ``d = 0, 1, ..., cap`` and
reports ``SurvivesCap(cap)`` when none succeeds.  Infinite survival is never
claimed.

The last round needs no partition enumeration: both sides contain a copy
exactly when the intermediate graph has two edge-disjoint copies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .canon import canonical_form
from .cliques import has_clique, iter_cliques
from .copies import contains, two_edge_disjoint_copies
from .errors import BudgetExceeded, InvalidInput
from .game import BuilderMove, apply_choice, format_transcript
from .graph import Edge, Graph, is_complete
from .matching import endpoints_of, enumerate_matchings

DEFAULT_CAP = 3
DEFAULT_MAX_EDGES = 22
DEFAULT_MAX_NODES = 1_000_000


@dataclass(frozen=True)
class WinsIn:
    t: int

    def __str__(self):
        return f"WinsIn({self.t})"


@dataclass(frozen=True)
class SurvivesCap:
    cap: int

    def __str__(self):
        return f"SurvivesCap({self.cap})"


@dataclass
class SolveResult:
    verdict: WinsIn | SurvivesCap
    principal_variation: list[tuple[BuilderMove, int]] = field(default_factory=list)
    nodes_searched: int = 0

    @property
    def value(self) -> int | None:
        return self.verdict.t if isinstance(self.verdict, WinsIn) else None

    def transcript(self) -> str:
        return format_transcript(self.principal_variation)

    def __str__(self):
        return str(self.verdict)


@dataclass
class MemoEntry:
    """What is known about one canonical position.

    ``fails_upto``: Builder cannot win within that many rounds (-1 if unknown).
    ``wins_at``: Builder wins within that many rounds (None if unknown).
    """

    fails_upto: int = -1
    wins_at: int | None = None


def iter_bipartitions(edges: Sequence[Edge], symmetric: bool = True) -> Iterator[tuple[frozenset, frozenset]]:
    """All ordered 2-partitions of ``edges``.

    With ``symmetric`` the first edge is pinned to part 0, which visits each
    unordered partition once: ``2**(m-1)`` instead of ``2**m``.
    """
    es = list(edges)
    if not es:
        yield frozenset(), frozenset()
        return
    head, free = (es[:1], es[1:]) if symmetric else ([], es)
    for mask in range(1 << len(free)):
        p1 = [free[i] for i in range(len(free)) if mask >> i & 1]
        p0 = head + [free[i] for i in range(len(free)) if not mask >> i & 1]
        yield frozenset(p0), frozenset(p1)


def plus_graph(g: Graph, m: Sequence[Edge]) -> tuple[Graph, int]:
    """Intermediate graph for a matching already known to be valid."""
    w = g.next_id()
    prov = dict(g.provenance_map)
    rnd = g.rounds_played() + 1
    prov[w] = rnd
    labels = g.labels
    if labels:
        labels = dict(labels)
        labels[w] = f"w{rnd}"
    es = (g.edges - frozenset(m)) | {(z, w) for z in endpoints_of(m)}
    return Graph._make(g.vertices + (w,), frozenset(es), prov, labels), w


class Solver:
    """Exact bounded search against one fixed target.

    ``memo`` keeps a transposition table keyed by canonical form; ``dedup``
    skips matchings whose intermediate graphs are isomorphic to one already
    tried; ``symmetric`` pins the first intermediate edge to part 0.
    Positions and last-round intermediate graphs both count against
    ``max_nodes``.
    """

    def __init__(
        self,
        target: Graph,
        *,
        memo: bool = True,
        dedup: bool = True,
        symmetric: bool = True,
        max_edges: int = DEFAULT_MAX_EDGES,
        max_nodes: int | None = DEFAULT_MAX_NODES,
    ):
        if target.n == 0:
            raise InvalidInput("target must be nonempty")
        self.target = target
        self.memo = memo
        self.dedup = dedup
        self.symmetric = symmetric
        self.max_edges = max_edges
        self.max_nodes = max_nodes
        self.nodes = 0
        self.partitions_visited = 0
        self.table: dict[tuple, MemoEntry] = {}
        self._keys: dict[frozenset, tuple] = {}
        self._clique = target.n if is_complete(target) and target.m > 0 else None

    # -- primitives ------------------------------------------------------

    def contains_target(self, g: Graph) -> bool:
        if self._clique is not None:
            return has_clique(g, self._clique)
        return contains(g, self.target)

    def _disjoint_pair(self, g: Graph):
        """Edge sets of two edge-disjoint target copies in ``g``, or None."""
        if self._clique is not None:
            k = self._clique
            cl = [frozenset(c) for c in iter_cliques(g, k)]
            for i, a in enumerate(cl):
                for b in cl[i + 1:]:
                    if len(a & b) <= 1:
                        return _clique_edges(a), _clique_edges(b)
            return None
        pair = two_edge_disjoint_copies(g, self.target)
        return None if pair is None else (pair[0].edges, pair[1].edges)

    def _key(self, g: Graph):
        k = self._keys.get(g.edges)
        if k is None:
            if len(self._keys) > 500_000:
                self._keys.clear()
            k = self._keys[g.edges] = canonical_form(g)
        return k

    def _tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget {self.max_nodes} exhausted")

    # -- search ------------------------------------------------------------

    def wins(self, g: Graph, depth: int) -> bool:
        """Whether Builder forces the target from ``g`` within ``depth`` rounds."""
        self._tick()
        if self.contains_target(g):
            return True
        if depth <= 0:
            return False
        entry = None
        if self.memo:
            key = self._key(g)
            entry = self.table.get(key)
            if entry is not None:
                if depth <= entry.fails_upto:
                    return False
                if entry.wins_at is not None and depth >= entry.wins_at:
                    return True
            else:
                entry = self.table[key] = MemoEntry()
        won = self.winning_move(g, depth) is not None
        if entry is not None:
            if won:
                entry.wins_at = depth if entry.wins_at is None else min(entry.wins_at, depth)
            else:
                entry.fails_upto = max(entry.fails_upto, depth)
        return won

    def winning_move(self, g: Graph, depth: int) -> BuilderMove | None:
        """First move (in deterministic order) winning within ``depth`` rounds.

        Assumes the target is not already present in ``g``.
        """
        if depth <= 0:
            return None
        if depth == 1:
            for m in enumerate_matchings(g, min_size=1):
                self._tick()
                plus, _ = plus_graph(g, m)
                pair = self._disjoint_pair(plus)
                if pair is not None:
                    return BuilderMove(m, (plus.edges - pair[1], pair[1]))
            return None
        seen = set()
        for m in enumerate_matchings(g, min_size=1):
            plus, _ = plus_graph(g, m)
            if self.dedup:
                k = canonical_form(plus)
                if k in seen:
                    continue
                seen.add(k)
            es = plus.sorted_edges()
            if len(es) > self.max_edges:
                raise BudgetExceeded(
                    f"intermediate graph has {len(es)} edges; full bipartition search is capped at {self.max_edges}"
                )
            for p0, p1 in iter_bipartitions(es, self.symmetric):
                self.partitions_visited += 1
                a = Graph._make(plus.vertices, p0, plus.provenance_map, plus.labels)
                if not self.wins(a, depth - 1):
                    continue
                b = Graph._make(plus.vertices, p1, plus.provenance_map, plus.labels)
                if self.wins(b, depth - 1):
                    return BuilderMove(m, (p0, p1))
        return None

    def value(self, g: Graph, cap: int) -> int | None:
        """Least ``t <= cap`` with ``wins(g, t)``, else None."""
        for t in range(cap + 1):
            if self.wins(g, t):
                return t
        return None

    def principal_variation(self, g: Graph, t: int) -> list[tuple[BuilderMove, int]]:
        """Builder's first winning move each round against Chooser's best reply."""
        pv = []
        while t > 0:
            move = self.winning_move(g, t)
            plus, _ = plus_graph(g, move.matching)
            kept = [apply_choice(plus, move, c) for c in (0, 1)]
            vals = [self.value(k, t - 1) for k in kept]
            c = 0 if vals[0] >= vals[1] else 1
            pv.append((move, c))
            g, t = kept[c], vals[c]
        return pv

    def solve(self, seed: Graph, cap: int = DEFAULT_CAP, pv: bool = True) -> SolveResult:
        if cap < 0:
            raise InvalidInput("cap must be >= 0")
        if seed.n == 0:
            raise InvalidInput("seed must be nonempty")
        t = self.value(seed, cap)
        if t is None:
            return SolveResult(SurvivesCap(cap), [], self.nodes)
        line = self.principal_variation(seed, t) if pv else []
        return SolveResult(WinsIn(t), line, self.nodes)


def _clique_edges(vs: frozenset[int]) -> frozenset[Edge]:
    s = sorted(vs)
    return frozenset((s[i], s[j]) for i in range(len(s)) for j in range(i + 1, len(s)))


def solve(seed: Graph, target: Graph, cap: int = DEFAULT_CAP, pv: bool = True, **options) -> SolveResult:
    """Forcing time of ``target`` from ``seed`` up to ``cap`` rounds."""
    return Solver(target, **options).solve(seed, cap, pv=pv)


def one_round_win(g: Graph, target: Graph) -> BuilderMove | None:
    """A move that forces ``target`` in one round, or None.

    The bipartition puts one full copy in each part; every other edge goes
    to part 0.
    """
    return Solver(target, memo=False).winning_move(g, 1)


def best_chooser_choice(intermediate: Graph, move: BuilderMove, target: Graph, cap: int = DEFAULT_CAP,
                        solver: Solver | None = None) -> int:
    """Bit whose kept side has the larger forcing time (ties to 0)."""
    solver = solver or Solver(target)
    vals = []
    for c in (0, 1):
        v = solver.value(apply_choice(intermediate, move, c), cap)
        vals.append(math.inf if v is None else v)
    return 0 if vals[0] >= vals[1] else 1
