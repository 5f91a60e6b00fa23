"""One round of the degree-preserving Builder-Chooser game, plus transcripts.

A round: Builder picks a matching ``M`` of the current graph, deletes it,
adds a new vertex ``w`` joined to every endpoint of ``M`` (the DPG step),
then splits the edge set of that intermediate graph into two parts.
Chooser keeps one part; all vertices survive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .cliques import clique_number
from .copies import contains
from .errors import InvalidInput, InvariantViolation, ParseError
from .graph import Edge, Graph, SEED, edge, format_edge
from .matching import Matching, check_matching, endpoints_of


@dataclass(frozen=True)
class BuilderMove:
    """A matching of the current graph and a 2-partition of the intermediate edges."""

    matching: Matching
    parts: tuple[frozenset[Edge], frozenset[Edge]]

    @classmethod
    def make(cls, matching: Iterable[Edge], part0: Iterable[Edge], part1: Iterable[Edge]) -> "BuilderMove":
        return cls(
            tuple(sorted(edge(*e) for e in matching)),
            (frozenset(edge(*e) for e in part0), frozenset(edge(*e) for e in part1)),
        )


@dataclass(frozen=True)
class GameState:
    graph: Graph
    round: int = 0
    transcript: tuple[tuple[BuilderMove, int], ...] = ()
    seed_omega: int | None = field(default=None, compare=False)

    @classmethod
    def start(cls, seed: Graph) -> "GameState":
        if seed.rounds_played() != 0:
            raise InvalidInput("seed graphs must consist of seed vertices only")
        return cls(seed, 0, (), clique_number(seed))


def dpg_step(g: Graph, m: Iterable[Edge], round: int, label: str | None = None) -> tuple[Graph, int]:
    """Delete ``m``, add a vertex tagged with ``round`` joined to ``V(m)``."""
    if round < 1:
        raise InvalidInput("rounds are numbered from 1")
    m = check_matching(g, m)
    w = g.next_id()
    prov = dict(g.provenance_map)
    prov[w] = round
    labels = g.labels
    if label is not None:
        labels = dict(labels)
        labels[w] = label
    es = (g.edges - frozenset(m)) | {(z, w) for z in endpoints_of(m)}
    return Graph._make(g.vertices + (w,), frozenset(es), prov, labels), w


def check_partition(intermediate: Graph, move: BuilderMove) -> None:
    a, b = move.parts
    problems = []
    both = a & b
    if both:
        problems.append("in both parts: " + ",".join(format_edge(e) for e in sorted(both)))
    missing = intermediate.edges - a - b
    if missing:
        problems.append("missing: " + ",".join(format_edge(e) for e in sorted(missing)))
    foreign = (a | b) - intermediate.edges
    if foreign:
        problems.append("not intermediate edges: " + ",".join(format_edge(e) for e in sorted(foreign)))
    if problems:
        raise InvalidInput("not a partition of E(G+); " + "; ".join(problems))


def apply_choice(intermediate: Graph, move: BuilderMove, c: int) -> Graph:
    """Keep all vertices and only the edges of part ``c``."""
    if c not in (0, 1):
        raise InvalidInput(f"chooser bit must be 0 or 1, got {c!r}")
    check_partition(intermediate, move)
    return Graph._make(intermediate.vertices, move.parts[c], intermediate.provenance_map, intermediate.labels)


def intermediate_graph(s: GameState, move: BuilderMove) -> Graph:
    g, _ = dpg_step(s.graph, move.matching, s.round + 1, label=f"w{s.round + 1}")
    return g


def play_round(s: GameState, move: BuilderMove, c: int, check: bool = True) -> GameState:
    inter = intermediate_graph(s, move)
    kept = apply_choice(inter, move, c)
    nxt = GameState(kept, s.round + 1, s.transcript + ((move, c),), s.seed_omega)
    if check:
        check_invariants(nxt)
    return nxt


def check_invariants(s: GameState) -> None:
    created = [v for v in s.graph.vertices if s.graph.provenance(v) != SEED]
    rounds = sorted(s.graph.provenance(v) for v in created)
    if rounds != list(range(1, s.round + 1)):
        raise InvariantViolation(f"created-vertex rounds {rounds} after {s.round} rounds")
    if s.seed_omega is not None:
        om = clique_number(s.graph)
        if om > s.seed_omega + s.round:
            raise InvariantViolation(f"clique number {om} exceeds {s.seed_omega} + {s.round}")


def is_win(s: GameState | Graph, target) -> bool:
    """Whether the kept graph contains ``target``.

    ``target`` is a pattern graph or a predicate on graphs.
    """
    g = s.graph if isinstance(s, GameState) else s
    if callable(target) and not isinstance(target, Graph):
        return bool(target(g))
    return contains(g, target)


# -- transcript format ---------------------------------------------------------
#
#   M: u1-v1,u2-v2 | A: e,e,... | B: e,e,... | c: 0|1


def format_round(move: BuilderMove, c: int) -> str:
    def es(edges):
        return ",".join(format_edge(e) for e in sorted(edges))

    return f"M: {es(move.matching)} | A: {es(move.parts[0])} | B: {es(move.parts[1])} | c: {c}"


def format_transcript(transcript: Iterable[tuple[BuilderMove, int]]) -> str:
    return "".join(format_round(m, c) + "\n" for m, c in transcript)


def _parse_edges(text: str, lineno: int) -> list[Edge]:
    text = text.strip()
    if not text:
        return []
    out = []
    for tok in text.split(","):
        try:
            a, b = tok.strip().split("-")
            out.append(edge(int(a), int(b)))
        except (ValueError, InvalidInput):
            raise ParseError(f"bad edge token {tok.strip()!r}", lineno) from None
    return out


def parse_transcript(text: str) -> list[tuple[BuilderMove, int]]:
    rounds = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 4:
            raise ParseError("expected 'M: ... | A: ... | B: ... | c: b'", lineno)
        parsed = {}
        for f, tag in zip(fields, ("M", "A", "B", "c")):
            if not f.startswith(tag + ":"):
                raise ParseError(f"expected field {tag}:", lineno)
            parsed[tag] = f[len(tag) + 1:]
        bit = parsed["c"].strip()
        if bit not in ("0", "1"):
            raise ParseError(f"chooser bit must be 0 or 1, got {bit!r}", lineno)
        move = BuilderMove.make(
            _parse_edges(parsed["M"], lineno), _parse_edges(parsed["A"], lineno), _parse_edges(parsed["B"], lineno)
        )
        rounds.append((move, int(bit)))
    return rounds


def replay(seed: Graph, text: str) -> list[GameState]:
    """Play a serialized transcript from ``seed``; returns every state."""
    states = [GameState.start(seed)]
    for move, c in parse_transcript(text):
        states.append(play_round(states[-1], move, c))
    return states
