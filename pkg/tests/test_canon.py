"""Canonical forms and graph generation, checked against the networkx atlas."""

import itertools
import random
from collections import defaultdict

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from dpgclique.canon import canonical_form, canonical_key, generate_graphs, isomorphic
from dpgclique.gadgets import complete, cycle, fan_h, path, rho4_seed
from dpgclique.graph import Graph


def from_nx(g):
    return Graph(g.nodes, [tuple(sorted(e)) for e in g.edges])


@pytest.fixture(scope="module")
def atlas():
    return [from_nx(g) for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= 7]


def shuffled(g, rng):
    perm = list(g.vertices)
    rng.shuffle(perm)
    return g.relabel(dict(zip(g.vertices, perm)))


def test_examples():
    p4 = path(4)
    assert canonical_form(p4) == canonical_form(p4.relabel({0: 3, 1: 0, 2: 2, 3: 1}))
    star = Graph(range(4), [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(p4) != canonical_form(star)
    c6 = cycle(6)
    padded = Graph(range(8), c6.edges)
    assert canonical_form(padded) == canonical_form(c6)
    assert canonical_key(padded) != canonical_key(c6)


def test_keys_separate_exactly_the_isomorphism_classes(atlas):
    """The atlas lists every class once, so keys must collide only through isolated vertices."""
    by_key = defaultdict(list)
    for g in atlas:
        by_key[canonical_form(g)].append(g)
    no_isolated = [g for g in atlas if not g.isolated()]
    # one key per isolated-free class, plus the edgeless graphs
    assert len(by_key) == len(no_isolated) + 1
    for group in by_key.values():
        for a, b in itertools.combinations(group, 2):
            assert oracles.isomorphic_brute(a, b)


def test_keys_invariant_under_relabeling(atlas):
    rng = random.Random(1)
    for g in atlas:
        for _ in range(3):
            h = shuffled(g, rng)
            assert canonical_key(h) == canonical_key(g)
            assert canonical_form(h) == canonical_form(g)


def test_brute_force_on_random_pairs():
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randint(1, 7)
        a = Graph(range(n), oracles.random_edges(rng, n, 0.5))
        b = Graph(range(n), oracles.random_edges(rng, n, 0.5)) if rng.random() < 0.5 else shuffled(a, rng)
        assert isomorphic(a, b) == oracles.isomorphic_brute(a, b)


def test_regular_and_symmetric_graphs():
    # refinement alone cannot split these; individualization has to
    c6 = cycle(6)
    two_triangles = Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_form(c6) != canonical_form(two_triangles)
    k33 = Graph(range(6), [(i, j) for i in range(3) for j in range(3, 6)])
    prism = Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert canonical_form(k33) != canonical_form(prism)
    pet = from_nx(nx.petersen_graph())
    rng = random.Random(4)
    assert canonical_form(shuffled(pet, rng)) == canonical_form(pet)
    assert isomorphic(shuffled(rho4_seed(), rng), rho4_seed())
    assert isomorphic(shuffled(fan_h(), rng), fan_h())


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), st.permutations(range(n)),
                                                      st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                                                               max_size=20))))
def test_relabel_invariance_property(case):
    n, perm, pairs = case
    g = Graph(range(n), {tuple(sorted(p)) for p in pairs if p[0] != p[1]})
    assert canonical_key(g.relabel(dict(enumerate(perm)))) == canonical_key(g)


def _atlas_count(n, pred):
    return sum(1 for g in nx.graph_atlas_g() if g.number_of_nodes() == n and pred(g))


def _triangle_free(g):
    return sum(nx.triangles(g).values()) == 0


@pytest.mark.parametrize("n", range(1, 8))
def test_generate_graphs_counts(n):
    assert len(generate_graphs(n)) == _atlas_count(n, lambda g: True)
    assert len(generate_graphs(n, triangle_free=True)) == _atlas_count(n, _triangle_free)
    assert len(generate_graphs(n, triangle_free=True, connected=True)) == _atlas_count(
        n, lambda g: _triangle_free(g) and nx.is_connected(g))


def test_generate_graphs_edge_cap_and_distinctness():
    gs = generate_graphs(6, max_edges=7, triangle_free=True)
    assert all(g.m <= 7 and g.n == 6 for g in gs)
    assert len({canonical_key(g) for g in gs}) == len(gs)
    assert len(gs) == _atlas_count(6, lambda g: g.number_of_edges() <= 7 and _triangle_free(g))


def test_complete_and_paths_have_expected_keys():
    assert canonical_form(complete(4))[0] == 4
    assert canonical_form(path(1)) == canonical_form(Graph([], []))
