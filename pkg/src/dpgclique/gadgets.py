"""Deterministic constructors for the graph families used by the strategies.

Vertex labels follow the usual names of each construction (``v1..vn`` on
paths and cycles; ``z, a1, b1, a1', a1'', ...`` on the fan gadget; ``c1..c16``
with leaves ``c1', c1''`` on the 16-cycle seed).  Integer ids are assigned in
natural sorted label order, so ``v1 -> 0``, ``v2 -> 1`` and so on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .canon import _is_connected
from .cliques import iter_cliques
from .errors import InvalidInput
from .graph import Graph

FAMILIES = ("path", "cycle", "complete", "fanh", "rho4seed", "supported-template")


def natural_key(label: str):
    return [int(p) if p.isdigit() else p for p in re.split(r"(\d+)", label)]


def labeled_graph(labels: Iterable[str], edges: Iterable[tuple[str, str]]) -> Graph:
    names = sorted(set(labels), key=natural_key)
    ids = {s: i for i, s in enumerate(names)}
    return Graph(range(len(names)), ((ids[a], ids[b]) for a, b in edges), labels={i: s for s, i in ids.items()})


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidInput("path needs n >= 1")
    vs = [f"v{i}" for i in range(1, n + 1)]
    return labeled_graph(vs, zip(vs, vs[1:]))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInput("cycle needs n >= 3")
    vs = [f"v{i}" for i in range(1, n + 1)]
    return labeled_graph(vs, zip(vs, vs[1:] + vs[:1]))


def complete(k: int) -> Graph:
    if k < 1:
        raise InvalidInput("complete graph needs k >= 1")
    vs = [f"v{i}" for i in range(1, k + 1)]
    return labeled_graph(vs, ((a, b) for i, a in enumerate(vs) for b in vs[i + 1:]))


def fan_h() -> Graph:
    """Four triangles ``z a_i b_i`` sharing the apex, two leaves on each of ``a_i, b_i``."""
    labels = ["z"]
    edges = []
    for i in range(1, 5):
        a, b = f"a{i}", f"b{i}"
        labels += [a, b]
        edges += [("z", a), ("z", b), (a, b)]
        for x in (a, b):
            labels += [x + "'", x + "''"]
            edges += [(x, x + "'"), (x, x + "''")]
    return labeled_graph(labels, edges)


def rho4_seed() -> Graph:
    """The 16-cycle ``c1..c16`` with two pendant leaves on every cycle vertex."""
    labels, edges = [], []
    for i in range(1, 17):
        c, nxt = f"c{i}", f"c{i % 16 + 1}"
        labels += [c, c + "'", c + "''"]
        edges += [(c, nxt), (c, c + "'"), (c, c + "''")]
    return labeled_graph(labels, edges)


def supported_template(r: int) -> Graph:
    """``K_r`` on ``x1..xr`` plus one pendant leaf ``yi`` per core vertex."""
    if r < 2:
        raise InvalidInput("template needs r >= 2")
    xs = [f"x{i}" for i in range(1, r + 1)]
    ys = [f"y{i}" for i in range(1, r + 1)]
    edges = [(a, b) for i, a in enumerate(xs) for b in xs[i + 1:]] + list(zip(xs, ys))
    return labeled_graph(xs + ys, edges)


@dataclass(frozen=True)
class GadgetSpec:
    family: str
    n: int | None = None

    def describe(self) -> str:
        return self.family if self.n is None else f"{self.family}({self.n})"


def generate(spec: GadgetSpec) -> Graph:
    f = spec.family.lower()
    if f in ("path", "cycle", "complete", "supported-template"):
        if spec.n is None:
            raise InvalidInput(f"family {f} needs a size parameter n")
        return {"path": path, "cycle": cycle, "complete": complete, "supported-template": supported_template}[f](spec.n)
    if f == "fanh":
        return fan_h()
    if f == "rho4seed":
        return rho4_seed()
    raise InvalidInput(f"unknown family {spec.family!r}; known: {', '.join(FAMILIES)}")


# -- certification ------------------------------------------------------------


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    passed: bool
    witness: str = ""


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, None for forests."""
    best = None
    adj = g.adj
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: None}
        queue = [s]
        for v in queue:
            for u in sorted(adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


_CLAIM_RE = {
    "kfree": re.compile(r"^K(\d+)-free$"),
    "vcount": re.compile(r"^vertex-count=(\d+)$"),
    "ecount": re.compile(r"^edge-count=(\d+)$"),
    "girth": re.compile(r"^girth>(\d+)$"),
    "supported": re.compile(r"^contains-supported-copies\((\d+),(\d+)\)$"),
}


def certify(g: Graph, claims: Iterable[str]) -> list[ClaimResult]:
    """Check each claim exactly; failing claims carry a witness string.

    ``contains-supported-copies(r,count)`` holds when at least ``count``
    ``r``-clique cores admit a support matching.
    """
    from .strategies import find_supported_copies

    out = []
    for claim in claims:
        c = claim.strip()
        if c == "triangle-free":
            c = "K3-free"
        if c == "connected":
            ok = _is_connected(g)
            out.append(ClaimResult(claim, ok, "" if ok else "graph is disconnected"))
            continue
        m = _CLAIM_RE["kfree"].match(c)
        if m:
            r = int(m.group(1))
            w = next(iter_cliques(g, r), None)
            out.append(ClaimResult(claim, w is None, "" if w is None else "clique " + " ".join(g.label(v) for v in w)))
            continue
        m = _CLAIM_RE["vcount"].match(c)
        if m:
            ok = g.n == int(m.group(1))
            out.append(ClaimResult(claim, ok, "" if ok else f"has {g.n} vertices"))
            continue
        m = _CLAIM_RE["ecount"].match(c)
        if m:
            ok = g.m == int(m.group(1))
            out.append(ClaimResult(claim, ok, "" if ok else f"has {g.m} edges"))
            continue
        m = _CLAIM_RE["girth"].match(c)
        if m:
            gi = girth(g)
            ok = gi is None or gi > int(m.group(1))
            out.append(ClaimResult(claim, ok, "" if ok else f"girth is {gi}"))
            continue
        m = _CLAIM_RE["supported"].match(c)
        if m:
            r, count = int(m.group(1)), int(m.group(2))
            found = len(find_supported_copies(g, r))
            ok = found >= count
            out.append(ClaimResult(claim, ok, "" if ok else f"only {found} supported cores"))
            continue
        raise InvalidInput(f"unknown claim {claim!r}")
    return out

