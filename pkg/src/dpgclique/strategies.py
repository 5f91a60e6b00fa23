"""Scripted Builder strategies, supported copies, and exhaustive verification.

A supported copy of ``K_r`` is a core clique together with a support
matching that gives every core vertex its own edge to a vertex outside the
core.  Two copies are compatible when their cores are disjoint and the union
of the supports is still a matching; choosing that union as the next
matching makes the new vertex complete to both cores, leaving two
edge-disjoint ``K_{r+1}`` in the intermediate graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from . import gadgets
from .cliques import iter_cliques
from .copies import find_isomorphism
from .errors import InvalidInput
from .game import BuilderMove, GameState, intermediate_graph, is_win, play_round
from .graph import Edge, Graph, edge
from .matching import is_matching

# -- supported copies ----------------------------------------------------------


@dataclass(frozen=True)
class SupportedCopy:
    core: frozenset[int]
    support: tuple[Edge, ...]
    pattern_order: int

    def support_vertex(self, c: int) -> int:
        for u, v in self.support:
            if c in (u, v):
                return v if u == c else u
        raise KeyError(c)


def _support_candidates(g: Graph, core, blocked) -> list[list[int]]:
    return [sorted(u for u in g.neighbors(c) if u not in blocked) for c in sorted(core)]


def iter_support_systems(g: Graph, core) -> Iterator[tuple[Edge, ...]]:
    """Every support matching of ``core``: distinct outside neighbours, one per core vertex."""
    core = frozenset(core)
    cs = sorted(core)
    cands = _support_candidates(g, core, core)
    picked: list[int] = []

    def rec(i):
        if i == len(cs):
            yield tuple(sorted(edge(c, x) for c, x in zip(cs, picked)))
            return
        for x in cands[i]:
            if x not in picked:
                picked.append(x)
                yield from rec(i + 1)
                picked.pop()

    yield from rec(0)


def _sdr(cands: list[list[int]]) -> list[int] | None:
    """System of distinct representatives by augmenting paths (Kuhn)."""
    owner: dict[int, int] = {}

    def augment(i, seen):
        for x in cands[i]:
            if x in seen:
                continue
            seen.add(x)
            if x not in owner or augment(owner[x], seen):
                owner[x] = i
                return True
        return False

    for i in range(len(cands)):
        if not augment(i, set()):
            return None
    rep = [None] * len(cands)
    for x, i in owner.items():
        rep[i] = x
    return rep


def find_supported_copies(g: Graph, r: int, all_supports: bool = False) -> list[SupportedCopy]:
    """Supported ``K_r`` copies of ``g``.

    By default one copy per clique core that admits any support (the first
    found); with ``all_supports`` every (core, support) pair.
    """
    if r < 1:
        raise InvalidInput("r must be positive")
    out = []
    for clique in iter_cliques(g, r):
        core = frozenset(clique)
        if all_supports:
            out.extend(SupportedCopy(core, s, r) for s in iter_support_systems(g, core))
            continue
        cs = sorted(core)
        rep = _sdr(_support_candidates(g, core, core))
        if rep is not None:
            out.append(SupportedCopy(core, tuple(sorted(edge(c, x) for c, x in zip(cs, rep))), r))
    return out


def is_supported_copy(g: Graph, c: SupportedCopy) -> bool:
    core = sorted(c.core)
    if len(core) != c.pattern_order:
        return False
    if any(not g.has_edge(u, v) for i, u in enumerate(core) for v in core[i + 1:]):
        return False
    if len(c.support) != len(core) or not is_matching(c.support):
        return False
    hit = set()
    for u, v in c.support:
        if not g.has_edge(u, v):
            return False
        inside = (u in c.core) + (v in c.core)
        if inside != 1:
            return False
        hit.add(u if u in c.core else v)
    return hit == c.core


def compatible(c1: SupportedCopy, c2: SupportedCopy) -> bool:
    return not (c1.core & c2.core) and is_matching(c1.support + c2.support)


def find_compatible_pair(g: Graph, r: int) -> tuple[SupportedCopy, SupportedCopy] | None:
    """First pair of clique cores admitting a joint support matching."""
    cores = [frozenset(c) for c in iter_cliques(g, r)]
    for i, a in enumerate(cores):
        for b in cores[i + 1:]:
            if a & b:
                continue
            blocked = a | b
            ca, cb = sorted(a), sorted(b)
            rep = _sdr(_support_candidates(g, a, blocked) + _support_candidates(g, b, blocked))
            if rep is None:
                continue
            sa = tuple(sorted(edge(c, x) for c, x in zip(ca, rep[:r])))
            sb = tuple(sorted(edge(c, x) for c, x in zip(cb, rep[r:])))
            return SupportedCopy(a, sa, r), SupportedCopy(b, sb, r)
    return None


class SupportedPairTarget:
    """Pseudo-target: the graph holds two compatible supported ``K_r`` copies."""

    def __init__(self, r: int):
        if r < 1:
            raise InvalidInput("supported-pair needs r >= 1")
        self.r = r

    def __call__(self, g: Graph) -> bool:
        return find_compatible_pair(g, self.r) is not None

    def __repr__(self):
        return f"supported-pair:{self.r}"


def _clique_edges(vs) -> set[Edge]:
    s = sorted(vs)
    return {(s[i], s[j]) for i in range(len(s)) for j in range(i + 1, len(s))}


def promote(s: GameState, c1: SupportedCopy, c2: SupportedCopy) -> BuilderMove:
    """Match ``S1 | S2``; part 1 gets the ``K_{r+1}`` on ``c2``, part 0 the rest."""
    if not compatible(c1, c2):
        raise InvalidInput("supported copies are not compatible")
    for c in (c1, c2):
        if not is_supported_copy(s.graph, c):
            raise InvalidInput(f"core {sorted(c.core)} is not a supported copy in the current graph")
    m = tuple(sorted(c1.support + c2.support))
    w = s.graph.next_id()
    plus = intermediate_graph(s, BuilderMove(m, (frozenset(), frozenset())))
    side1 = _clique_edges(c2.core | {w})
    return BuilderMove(m, (plus.edges - side1, frozenset(side1)))


# -- labelled families ------------------------------------------------------------


def _walk(g: Graph, start: int, first: int) -> list[int]:
    order = [start, first]
    while True:
        nxt = [u for u in g.neighbors(order[-1]) if u != order[-2]]
        if not nxt or nxt[0] == start:
            return order
        order.append(nxt[0])


def path_order(g: Graph) -> list[int] | None:
    """Vertices of a path component in order from its smaller-id end, or None."""
    h = g.without_isolated()
    if h.n < 2 or h.m != h.n - 1 or any(h.degree(v) > 2 for v in h.vertices):
        return None
    ends = [v for v in h.vertices if h.degree(v) == 1]
    order = _walk(h, ends[0], next(iter(h.neighbors(ends[0]))))
    return order if len(order) == h.n else None


def cycle_order(g: Graph) -> list[int] | None:
    """Cycle vertices starting at the smallest id, heading to its smaller neighbour."""
    h = g.without_isolated()
    if h.n < 3 or h.m != h.n or any(h.degree(v) != 2 for v in h.vertices):
        return None
    start = h.vertices[0]
    order = _walk(h, start, min(h.neighbors(start)))
    return order if len(order) == h.n else None


def family_labeling(g: Graph, family: Graph) -> dict[str, int] | None:
    """Map the family's vertex labels onto ``g`` via an isomorphism of the non-isolated parts."""
    h = g.without_isolated()
    f = family.without_isolated()
    iso = find_isomorphism(h, f)
    if iso is None:
        return None
    return {family.label(v): x for v, x in iso.items()}


def _triangle_move(plus: Graph, m, tri_a, tri_b) -> BuilderMove:
    b = _clique_edges(tri_b)
    assert _clique_edges(tri_a) <= plus.edges and b <= plus.edges
    return BuilderMove(tuple(sorted(m)), (plus.edges - b, frozenset(b)))


def _path_move(s: GameState) -> BuilderMove:
    o = path_order(s.graph)
    w = s.graph.next_id()
    m = [edge(o[0], o[1]), edge(o[2], o[3]), edge(o[4], o[5])]
    plus = intermediate_graph(s, BuilderMove(tuple(sorted(m)), (frozenset(), frozenset())))
    return _triangle_move(plus, m, (w, o[1], o[2]), (w, o[3], o[4]))


def _cycle_move(s: GameState) -> BuilderMove:
    o = cycle_order(s.graph)
    w = s.graph.next_id()
    if len(o) == 4:
        m = [edge(o[0], o[1]), edge(o[2], o[3])]
        tris = (w, o[1], o[2]), (w, o[3], o[0])
    else:
        m = [edge(o[0], o[1]), edge(o[2], o[3]), edge(o[4], o[5])]
        tris = (w, o[1], o[2]), (w, o[3], o[4])
    plus = intermediate_graph(s, BuilderMove(tuple(sorted(m)), (frozenset(), frozenset())))
    return _triangle_move(plus, m, *tris)


def _c5_move(s: GameState) -> BuilderMove:
    if s.round == 0:
        o = cycle_order(s.graph)
        w = s.graph.next_id()
        m = [edge(o[0], o[1]), edge(o[2], o[3])]
        plus = intermediate_graph(s, BuilderMove(tuple(sorted(m)), (frozenset(), frozenset())))
        tri = _clique_edges((w, o[1], o[2]))
        return BuilderMove(tuple(sorted(m)), (frozenset(tri), plus.edges - tri))
    # the kept 4-cycle w v1 v5 v4
    return _cycle_move(s)


@dataclass(frozen=True)
class LemmaHRound:
    """The fan-gadget round spelled out: matching, new vertex and the two bundles."""

    matching: tuple[Edge, ...]
    new_vertex: int
    bundles: tuple[frozenset[Edge], frozenset[Edge]]
    copies: tuple[tuple[SupportedCopy, SupportedCopy], tuple[SupportedCopy, SupportedCopy]]
    move: BuilderMove


def lemma_h_round(s: GameState) -> LemmaHRound:
    lab = family_labeling(s.graph, gadgets.fan_h())
    if lab is None:
        raise InvalidInput("graph is not isomorphic to the fan gadget H (ignoring isolated vertices)")

    def e(a, b):
        return edge(lab[a] if a != "z'" else zp, lab[b] if b != "z'" else zp)

    zp = s.graph.next_id()
    m = tuple(sorted([e("a3", "a3'"), e("b3", "b3'"), e("a4", "a4'"), e("b4", "b4'")]))
    plus = intermediate_graph(s, BuilderMove(m, (frozenset(), frozenset())))

    def copy(core, support):
        return SupportedCopy(frozenset(lab[x] if x != "z'" else zp for x in core),
                             tuple(sorted(e(*p) for p in support)), 3)

    t0 = copy(("z", "a1", "b1"), [("a1", "a1''"), ("b1", "b1''"), ("z", "a4")])
    u0 = copy(("z'", "a3", "b3"), [("a3", "a3''"), ("b3", "b3''"), ("z'", "a4'")])
    t1 = copy(("z", "a2", "b2"), [("a2", "a2''"), ("b2", "b2''"), ("z", "a3")])
    u1 = copy(("z'", "a4", "b4"), [("a4", "a4''"), ("b4", "b4''"), ("z'", "b3'")])
    bundles = []
    for pair in ((t0, u0), (t1, u1)):
        es = set()
        for c in pair:
            es |= _clique_edges(c.core)
            es |= set(c.support)
        bundles.append(frozenset(es))
    for b in bundles:
        if not b <= plus.edges:
            raise InvalidInput("bundle edge missing from the intermediate graph")
    if bundles[0] & bundles[1]:
        raise InvalidInput("bundles overlap")
    move = BuilderMove(m, (plus.edges - bundles[1], bundles[1]))
    return LemmaHRound(m, zp, (bundles[0], bundles[1]), ((t0, u0), (t1, u1)), move)


def _fan_h_move(s: GameState) -> BuilderMove:
    return lemma_h_round(s).move


def rho4_round_one(s: GameState) -> BuilderMove:
    lab = family_labeling(s.graph, gadgets.rho4_seed())
    if lab is None:
        raise InvalidInput("graph is not isomorphic to the 16-cycle seed")
    c = {i: lab[f"c{i}"] for i in range(1, 17)}
    w = s.graph.next_id()
    m = tuple(sorted(edge(c[2 * i - 1], c[2 * i]) for i in range(1, 9)))
    plus = intermediate_graph(s, BuilderMove(m, (frozenset(), frozenset())))
    sides = []
    for block in (range(1, 5), range(5, 9)):
        es = set()
        for j in block:
            pair = (c[2 * j], c[2 * j % 16 + 1])  # triangle {w, c_2j, c_2j+1}
            es |= _clique_edges((w,) + pair)
            for x in pair:
                es |= {edge(x, u) for u in s.graph.neighbors(x) if s.graph.degree(u) == 1}
        sides.append(frozenset(es))
    if sides[0] & sides[1]:
        raise InvalidInput("round-one sides overlap")
    return BuilderMove(m, (plus.edges - sides[1], sides[1]))


def _promote_move(s: GameState) -> BuilderMove:
    pair = find_compatible_pair(s.graph, 3)
    if pair is None:
        raise InvalidInput("no pair of compatible supported triangles to promote")
    return promote(s, *pair)


def _rho4_move(s: GameState) -> BuilderMove:
    if s.round == 0:
        return rho4_round_one(s)
    if s.round == 1:
        return _fan_h_move(s)
    return _promote_move(s)


@dataclass(frozen=True)
class StrategyScript:
    name: str
    move_fn: Callable[[GameState], BuilderMove]
    declared_rounds: int
    family: str
    accepts: Callable[[Graph], bool]


def _is_path(g, lo):
    o = path_order(g)
    return o is not None and len(o) >= lo


def _is_cycle(g, sizes):
    o = cycle_order(g)
    return o is not None and sizes(len(o))


SCRIPTS = {
    "path_one_round": StrategyScript(
        "path_one_round", _path_move, 1, "paths P_n with n >= 6", lambda g: _is_path(g, 6)),
    "cycle_one_round": StrategyScript(
        "cycle_one_round", _cycle_move, 1, "cycles C_n with n = 4 or n >= 6",
        lambda g: _is_cycle(g, lambda n: n == 4 or n >= 6)),
    "c5_two_round": StrategyScript(
        "c5_two_round", _c5_move, 2, "the 5-cycle", lambda g: _is_cycle(g, lambda n: n == 5)),
    "fan_h_round": StrategyScript(
        "fan_h_round", _fan_h_move, 1, "the fan gadget H",
        lambda g: family_labeling(g, gadgets.fan_h()) is not None),
    "rho4_three_round": StrategyScript(
        "rho4_three_round", _rho4_move, 3, "the 16-cycle with two leaves per vertex",
        lambda g: family_labeling(g, gadgets.rho4_seed()) is not None),
}


def scripted(name: str) -> StrategyScript:
    try:
        return SCRIPTS[name]
    except KeyError:
        raise InvalidInput(f"unknown strategy {name!r}; known: {', '.join(SCRIPTS)}") from None


# -- verification ------------------------------------------------------------------


@dataclass(frozen=True)
class WinOnAllBranches:
    t_max: int
    leaves: tuple[GameState, ...]

    def __str__(self):
        return f"WinOnAllBranches({self.t_max})"


@dataclass(frozen=True)
class Counterexample:
    transcript: tuple
    reason: str

    def __str__(self):
        return f"Counterexample({self.reason})"


def verify_strategy(seed: Graph, strategy: StrategyScript, target, rounds: int) -> WinOnAllBranches | Counterexample:
    """Play ``strategy`` against every Chooser bit string, depth-first, bit 0 first.

    A branch ends as soon as the kept graph contains the target.
    """
    if rounds > strategy.declared_rounds:
        raise InvalidInput(f"{strategy.name} is declared for {strategy.declared_rounds} rounds, asked for {rounds}")
    if not strategy.accepts(seed):
        raise InvalidInput(f"seed outside family: {strategy.name} needs {strategy.family}")
    leaves: list[GameState] = []
    stack = [GameState.start(seed)]
    while stack:
        s = stack.pop()
        if is_win(s, target):
            leaves.append(s)
            continue
        if s.round >= rounds:
            return Counterexample(s.transcript, f"no target after {s.round} rounds")
        try:
            move = strategy.move_fn(s)
            children = [play_round(s, move, c) for c in (0, 1)]
        except (InvalidInput, AssertionError) as exc:
            return Counterexample(s.transcript, f"illegal move at round {s.round + 1}: {exc}")
        stack.extend(reversed(children))
    return WinOnAllBranches(max(s.round for s in leaves), tuple(leaves))


def play_strategy(seed: Graph, strategy: StrategyScript, target, rounds: int, chooser: str = "exhaustive",
                  rng: int | None = None) -> list[GameState]:
    """Final states of the played branches under a Chooser policy.

    ``exhaustive`` expands both choices everywhere; ``greedy-avoid`` keeps
    the part without the target when it can (bit 0 on ties); ``random``
    flips a seeded coin.
    """
    if chooser == "exhaustive":
        out = verify_strategy(seed, strategy, target, rounds)
        if isinstance(out, Counterexample):
            raise InvalidInput(str(out))
        return list(out.leaves)
    if not strategy.accepts(seed):
        raise InvalidInput(f"seed outside family: {strategy.name} needs {strategy.family}")
    coin = random.Random(rng)
    s = GameState.start(seed)
    while not is_win(s, target) and s.round < rounds:
        move = strategy.move_fn(s)
        kids = [play_round(s, move, c) for c in (0, 1)]
        if chooser == "random":
            c = coin.randrange(2)
        elif chooser == "greedy-avoid":
            c = 1 if is_win(kids[0], target) and not is_win(kids[1], target) else 0
        else:
            raise InvalidInput(f"unknown chooser policy {chooser!r}")
        s = kids[c]
    return [s]
