"""Gadget constructors and structural certification."""

import itertools
import random

import networkx as nx
import pytest

import oracles
from dpgclique.errors import InvalidInput
from dpgclique.gadgets import (
    FAMILIES,
    GadgetSpec,
    certify,
    cycle,
    fan_h,
    generate,
    girth,
    path,
    rho4_seed,
    supported_template,
)
from dpgclique.graph import Graph, to_edgelist
from dpgclique.strategies import find_supported_copies


def support_systems_brute(g, core):
    core = set(core)
    outs = [[u for u in g.neighbors(c) if u not in core] for c in sorted(core)]
    return [p for p in itertools.product(*outs) if len(set(p)) == len(p)]


def test_path_and_cycle():
    p = generate(GadgetSpec("path", 6))
    assert p.n == 6 and p.m == 5
    assert [p.label(v) for v in p.vertices] == [f"v{i}" for i in range(1, 7)]
    c = cycle(5)
    assert c.m == 5 and c.has_edge(c.vertex("v5"), c.vertex("v1"))
    assert path(1).n == 1 and path(1).m == 0


def test_invalid_sizes_and_families():
    for spec in (GadgetSpec("path", 0), GadgetSpec("cycle", 2), GadgetSpec("path"), GadgetSpec("nope", 3)):
        with pytest.raises(InvalidInput):
            generate(spec)


def test_rho4_seed_shape():
    g = rho4_seed()
    assert g.n == 48 and g.m == 48
    assert not oracles.cliques(g.vertices, g.edges, 3)
    for i in range(1, 17):
        c = g.vertex(f"c{i}")
        nxt = g.vertex(f"c{i % 16 + 1}")
        assert g.has_edge(c, nxt)
        leaves = {g.vertex(f"c{i}'"), g.vertex(f"c{i}''")}
        assert leaves <= g.neighbors(c) and all(g.degree(x) == 1 for x in leaves)


def test_fan_h_shape():
    h = fan_h()
    assert h.n == 25 and h.m == 28
    tris = oracles.cliques(h.vertices, h.edges, 3)
    z = h.vertex("z")
    assert len(tris) == 4 and all(z in t for t in tris)
    assert oracles.clique_number(h.vertices, h.edges) == 3
    for i in range(1, 5):
        for x in ("a", "b"):
            v = h.vertex(f"{x}{i}")
            assert {h.label(u) for u in h.neighbors(v)} >= {f"{x}{i}'", f"{x}{i}''", "z"}


def test_fan_h_supported_triangles_against_brute_force():
    h = fan_h()
    cores = find_supported_copies(h, 3)
    systems = find_supported_copies(h, 3, all_supports=True)
    per_core = {frozenset(t): len(support_systems_brute(h, t)) for t in oracles.cliques(h.vertices, h.edges, 3)}
    assert len(cores) == sum(1 for k in per_core.values() if k) == 4
    assert len(systems) == sum(per_core.values()) == 96
    z, a1, b1 = h.vertex("z"), h.vertex("a1"), h.vertex("b1")
    want = tuple(sorted([(min(a1, h.vertex("a1''")), max(a1, h.vertex("a1''"))),
                         (min(b1, h.vertex("b1''")), max(b1, h.vertex("b1''"))),
                         (min(z, h.vertex("a4")), max(z, h.vertex("a4")))]))
    assert any(c.core == {z, a1, b1} and c.support == want for c in systems)


def test_supported_template():
    g = supported_template(3)
    assert g.n == 6 and g.m == 6
    assert len(find_supported_copies(g, 3)) == 1
    assert len(find_supported_copies(g, 3, all_supports=True)) == 1
    assert find_supported_copies(generate(GadgetSpec("complete", 3)), 3) == []


def test_generators_are_deterministic():
    for fam in FAMILIES:
        spec = GadgetSpec(fam, None if fam in ("fanh", "rho4seed") else 5)
        assert to_edgelist(generate(spec)) == to_edgelist(generate(spec))


def test_certify_examples():
    seed = rho4_seed()
    rep = certify(seed, ["triangle-free", "vertex-count=48", "edge-count=48", "girth>3", "connected"])
    assert all(r.passed for r in rep)
    (bad,) = certify(fan_h(), ["triangle-free"])
    assert not bad.passed and set(bad.witness.split()) == {"clique", "z", "a1", "b1"}
    assert certify(cycle(5), ["K3-free"])[0].passed
    assert not certify(cycle(5), ["K2-free"])[0].passed
    assert not certify(seed, ["vertex-count=47"])[0].passed
    assert certify(fan_h(), ["contains-supported-copies(3,4)"])[0].passed
    assert not certify(fan_h(), ["contains-supported-copies(3,5)"])[0].passed
    assert not certify(Graph(range(4), [(0, 1)]), ["connected"])[0].passed
    with pytest.raises(InvalidInput):
        certify(seed, ["pretty"])


def test_girth_against_networkx():
    rng = random.Random(0)
    for _ in range(100):
        n = rng.randint(1, 10)
        es = oracles.random_edges(rng, n, rng.uniform(0.1, 0.5))
        ref = nx.Graph()
        ref.add_nodes_from(range(n))
        ref.add_edges_from(es)
        want = nx.girth(ref)
        assert girth(Graph(range(n), es)) == (None if want == float("inf") else want)
    assert girth(rho4_seed()) == 16
