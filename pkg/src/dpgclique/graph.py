"""Immutable simple graphs with stable vertex identities and provenance.

Vertices are plain ints and are never reused: a vertex created in round ``t``
gets the next free id and carries provenance ``t``.  Seed vertices carry
provenance ``SEED`` (0).  Edges are normalized ``(u, v)`` tuples with ``u < v``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from .errors import InvalidInput, ParseError

Edge = tuple[int, int]

SEED = 0


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise InvalidInput(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def format_edge(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


class Graph:
    """A finite simple undirected graph.

    Instances are never mutated; every operation that changes the graph
    returns a new instance.  Labels are optional display names (gadgets use
    them to mirror the vertex names of the constructions).
    """

    __slots__ = ("_vertices", "_edges", "_prov", "_labels", "_adj", "_hash")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[tuple[int, int]] = (),
        provenance: Mapping[int, int] | None = None,
        labels: Mapping[int, str] | None = None,
    ):
        vs = tuple(sorted(set(vertices)))
        vset = set(vs)
        es = set()
        for u, v in edges:
            e = edge(u, v)
            if u not in vset or v not in vset:
                raise InvalidInput(f"edge {format_edge(e)} has an endpoint outside the vertex set")
            es.add(e)
        prov = {v: SEED for v in vs}
        if provenance:
            for v, t in provenance.items():
                if v not in vset:
                    raise InvalidInput(f"provenance given for unknown vertex {v}")
                if t < 0:
                    raise InvalidInput(f"negative provenance for vertex {v}")
                prov[v] = t
        lab = {}
        if labels:
            for v, s in labels.items():
                if v not in vset:
                    raise InvalidInput(f"label given for unknown vertex {v}")
                lab[v] = str(s)
        self._init(vs, frozenset(es), prov, lab)

    def _init(self, vs, es, prov, labels):
        self._vertices = vs
        self._edges = es
        self._prov = prov
        self._labels = labels
        self._adj = None
        self._hash = None

    @classmethod
    def _make(cls, vertices, edges, provenance, labels) -> "Graph":
        # Trusted constructor for internal hot paths: no validation, no copies.
        g = cls.__new__(cls)
        g._init(vertices, edges, provenance, labels)
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> "Graph":
        edges = list(edges)
        vs = {x for e in edges for x in e}
        if n is not None:
            vs |= set(range(n))
        return cls(vs, edges)

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def labels(self) -> Mapping[int, str]:
        return self._labels

    @property
    def provenance_map(self) -> Mapping[int, int]:
        return self._prov

    def __len__(self) -> int:
        return len(self._vertices)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    @property
    def adj(self) -> dict[int, frozenset[int]]:
        if self._adj is None:
            nb: dict[int, set[int]] = {v: set() for v in self._vertices}
            for u, v in self._edges:
                nb[u].add(v)
                nb[v].add(u)
            self._adj = {v: frozenset(s) for v, s in nb.items()}
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._prov

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edges if u < v else (v, u) in self._edges

    def provenance(self, v: int) -> int:
        return self._prov[v]

    def label(self, v: int) -> str:
        return self._labels.get(v, str(v))

    def vertex(self, label: str) -> int:
        """Vertex id carrying ``label``."""
        for v, s in self._labels.items():
            if s == label:
                return v
        raise KeyError(label)

    def created_vertices(self) -> list[int]:
        """Vertices created by DPG steps, ordered by round."""
        return sorted((v for v, t in self._prov.items() if t != SEED), key=lambda v: self._prov[v])

    def rounds_played(self) -> int:
        return max(self._prov.values(), default=SEED)

    def next_id(self) -> int:
        return self._vertices[-1] + 1 if self._vertices else 0

    def isolated(self) -> list[int]:
        adj = self.adj
        return [v for v in self._vertices if not adj[v]]

    # -- derived graphs ---------------------------------------------------

    def with_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Same vertices, provenance and labels; edges replaced by a subset-safe set."""
        es = frozenset(edges)
        for u, v in es:
            if u not in self._prov or v not in self._prov or u >= v:
                raise InvalidInput(f"bad edge {u}-{v} for this vertex set")
        return Graph._make(self._vertices, es, self._prov, self._labels)

    def add_vertex(self, provenance: int = SEED, label: str | None = None) -> tuple["Graph", int]:
        w = self.next_id()
        prov = dict(self._prov)
        prov[w] = provenance
        labels = self._labels
        if label is not None:
            labels = dict(labels)
            labels[w] = label
        return Graph._make(self._vertices + (w,), self._edges, prov, labels), w

    def induced(self, vs: Iterable[int]) -> "Graph":
        keep = set(vs)
        missing = keep - self._prov.keys()
        if missing:
            raise InvalidInput(f"unknown vertices {sorted(missing)}")
        es = frozenset(e for e in self._edges if e[0] in keep and e[1] in keep)
        return Graph._make(
            tuple(sorted(keep)),
            es,
            {v: self._prov[v] for v in keep},
            {v: s for v, s in self._labels.items() if v in keep},
        )

    def without_isolated(self) -> "Graph":
        adj = self.adj
        return self.induced(v for v in self._vertices if adj[v])

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        """Rename vertex ids through an injective ``mapping``."""
        if len(set(mapping[v] for v in self._vertices)) != len(self._vertices):
            raise InvalidInput("relabeling is not injective")
        return Graph(
            (mapping[v] for v in self._vertices),
            ((mapping[u], mapping[v]) for u, v in self._edges),
            {mapping[v]: t for v, t in self._prov.items()},
            {mapping[v]: s for v, s in self._labels.items()},
        )

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._edges == other._edges
            and self._prov == other._prov
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges, tuple(sorted(self._prov.items()))))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={self.sorted_edges()})"


def complete_graph(k: int) -> Graph:
    return Graph(range(k), ((i, j) for i in range(k) for j in range(i + 1, k)))


def is_complete(g: Graph) -> bool:
    n = g.n
    return g.m == n * (n - 1) // 2


# -- edge-list text format --------------------------------------------------

_PROV_RE = re.compile(r"#\s*provenance\s+(\d+)\s+(\d+)\s*$")
_LABEL_RE = re.compile(r"#\s*label\s+(\d+)\s+(\S+)\s*$")


def to_edgelist(g: Graph) -> str:
    """Serialize as ``n m`` then ``u v`` lines over 0-based dense indices.

    Ids are compacted in sorted order.  Non-seed provenance and labels are
    written as ``# provenance v t`` and ``# label v name`` comment lines.
    """
    index = {v: i for i, v in enumerate(g.vertices)}
    lines = [f"{g.n} {g.m}"]
    for v in g.vertices:
        if g.provenance(v) != SEED:
            lines.append(f"# provenance {index[v]} {g.provenance(v)}")
    for v in g.vertices:
        if v in g.labels:
            lines.append(f"# label {index[v]} {g.labels[v]}")
    for u, v in g.sorted_edges():
        lines.append(f"{index[u]} {index[v]}")
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    header = None
    edges: set[Edge] = set()
    prov: dict[int, int] = {}
    labels: dict[int, str] = {}
    lineno = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            mp = _PROV_RE.match(line)
            if mp:
                prov[int(mp.group(1))] = int(mp.group(2))
                continue
            ml = _LABEL_RE.match(line)
            if ml:
                labels[int(ml.group(1))] = ml.group(2)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
        if a == b:
            raise ParseError(f"self-loop at {a}", lineno)
        e = edge(a, b)
        if e in edges:
            raise ParseError(f"duplicate edge {a} {b}", lineno)
        if len(edges) == header[1]:
            raise ParseError(f"more edges than the {header[1]} declared in the header", lineno)
        edges.add(e)
    if header is None:
        raise ParseError("missing 'n m' header", 1)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", lineno)
    for v in list(prov) + list(labels):
        if not 0 <= v < n:
            raise ParseError(f"annotation for vertex {v} out of range", lineno)
    return Graph(range(n), edges, prov, labels)


def to_dot(g: Graph, name: str = "G") -> str:
    def q(v):
        return '"' + g.label(v).replace('"', r"\"") + '"'

    lines = [f"graph {name} {{"]
    for v in g.vertices:
        extra = "" if g.provenance(v) == SEED else f" [shape=box, round={g.provenance(v)}]"
        lines.append(f"  {q(v)}{extra};")
    for u, v in g.sorted_edges():
        lines.append(f"  {q(u)} -- {q(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def iter_pairs(items) -> Iterator[tuple]:
    items = list(items)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield items[i], items[j]
