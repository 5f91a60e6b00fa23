"""Supported copies, promotion, scripted strategies and exhaustive verification."""

import random

import pytest

from dpgclique.canon import canonical_form
from dpgclique.errors import InvalidInput
from dpgclique.gadgets import cycle, fan_h, path, rho4_seed, supported_template
from dpgclique.game import GameState, check_partition, format_transcript, intermediate_graph, is_win, play_round, replay
from dpgclique.graph import Graph, complete_graph, edge
from dpgclique.randomized import planted_compatible_pair
from dpgclique.strategies import (
    SCRIPTS,
    Counterexample,
    SupportedCopy,
    SupportedPairTarget,
    WinOnAllBranches,
    compatible,
    family_labeling,
    find_compatible_pair,
    find_supported_copies,
    is_supported_copy,
    lemma_h_round,
    play_strategy,
    promote,
    rho4_round_one,
    scripted,
    verify_strategy,
)

K3, K4 = complete_graph(3), complete_graph(4)


def shuffled(g, seed):
    rng = random.Random(seed)
    perm = list(g.vertices)
    rng.shuffle(perm)
    return g.relabel(dict(zip(g.vertices, perm)))


def two_templates():
    t = supported_template(3)
    return Graph(range(12), list(t.edges) + [(u + 6, v + 6) for u, v in t.edges])


# -- supported copies ---------------------------------------------------------------------


def test_find_supported_copies_examples():
    (c,) = find_supported_copies(supported_template(3), 3)
    assert is_supported_copy(supported_template(3), c)
    assert find_supported_copies(complete_graph(3), 3) == []
    h = fan_h()
    z, a1, b1 = (h.vertex(x) for x in ("z", "a1", "b1"))
    sup = tuple(sorted([edge(a1, h.vertex("a1''")), edge(b1, h.vertex("b1''")), edge(z, h.vertex("a4"))]))
    assert SupportedCopy(frozenset({z, a1, b1}), sup, 3) in find_supported_copies(h, 3, all_supports=True)


def test_support_needs_distinct_outside_endpoints():
    # K3 plus one extra vertex joined to all three: no private support edges
    g = Graph(range(4), [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])
    cores = {c.core for c in find_supported_copies(g, 3)}
    assert frozenset({0, 1, 2}) not in cores
    assert not is_supported_copy(g, SupportedCopy(frozenset({0, 1, 2}), ((0, 3), (1, 3), (2, 3)), 3))


def test_compatible_examples():
    g = two_templates()
    a, b = sorted(find_supported_copies(g, 3), key=lambda c: min(c.core))
    assert compatible(a, b)
    assert not compatible(a, a)
    shared = SupportedCopy(frozenset({0, 1, 7}), a.support, 3)
    assert not compatible(a, shared)
    # disjoint cores but supports meeting at one outside vertex
    c1 = SupportedCopy(frozenset({0, 1, 2}), ((0, 9),), 3)
    c2 = SupportedCopy(frozenset({3, 4, 5}), ((3, 9),), 3)
    assert not compatible(c1, c2)


def test_fan_round_pair_is_compatible_on_kept_sides():
    s = GameState.start(fan_h())
    lr = lemma_h_round(s)
    assert not lr.bundles[0] & lr.bundles[1]
    for c in (0, 1):
        kept = play_round(s, lr.move, c).graph
        t, u = lr.copies[c]
        assert is_supported_copy(kept, t) and is_supported_copy(kept, u)
        assert compatible(t, u)
        assert SupportedPairTarget(3)(kept)


def test_fan_round_matching_and_new_vertex():
    h = fan_h()
    lr = lemma_h_round(GameState.start(h))
    names = {tuple(sorted((h.label(u), h.label(v)))) for u, v in lr.matching}
    assert names == {("a3", "a3'"), ("b3", "b3'"), ("a4", "a4'"), ("b4", "b4'")}
    assert lr.new_vertex == h.next_id()


# -- promotion --------------------------------------------------------------------------------


def test_promote_two_templates():
    g = two_templates()
    s = GameState.start(g)
    a, b = find_compatible_pair(g, 3)
    move = promote(s, a, b)
    assert set(move.matching) == set(a.support) | set(b.support)
    check_partition(intermediate_graph(s, move), move)
    w = g.next_id()
    for c in (0, 1):
        kept = play_round(s, move, c).graph
        assert is_win(kept, K4)
    side1 = play_round(s, move, 1).graph
    assert all(side1.has_edge(x, y) for x in b.core | {w} for y in b.core | {w} if x < y)


def test_promote_rejects_bad_pairs():
    g = two_templates()
    s = GameState.start(g)
    (a, b) = find_compatible_pair(g, 3)
    with pytest.raises(InvalidInput):
        promote(s, a, a)
    fake = SupportedCopy(frozenset({0, 1, 2}), ((0, 11),), 3)
    with pytest.raises(InvalidInput):
        promote(s, fake, b)


def test_promote_after_fan_round_wins_next_round():
    s = GameState.start(fan_h())
    lr = lemma_h_round(s)
    for c in (0, 1):
        kept = play_round(s, lr.move, c)
        t, u = lr.copies[c]
        move = promote(kept, t, u)
        for c2 in (0, 1):
            assert is_win(play_round(kept, move, c2), K4)


@pytest.mark.parametrize("r", [3, 4])
def test_promote_on_planted_pairs(r):
    rng = random.Random(r)
    target = complete_graph(r + 1)
    for _ in range(40):
        g, c1, c2 = planted_compatible_pair(rng, r, extra=rng.randint(0, 4), p=rng.uniform(0, 0.3))
        s = GameState.start(g)
        move = promote(s, c1, c2)
        check_partition(intermediate_graph(s, move), move)
        assert all(is_win(play_round(s, move, c), target) for c in (0, 1))
        # the searched pair works as well
        pair = find_compatible_pair(g, r)
        assert pair is not None
        move = promote(s, *pair)
        assert all(is_win(play_round(s, move, c), target) for c in (0, 1))


# -- scripted strategies ----------------------------------------------------------------------


def test_cycle_one_round_on_c6():
    g = cycle(6)
    move = scripted("cycle_one_round").move_fn(GameState.start(g))
    want = {edge(g.vertex(a), g.vertex(b)) for a, b in (("v1", "v2"), ("v3", "v4"), ("v5", "v6"))}
    assert set(move.matching) == want
    assert str(verify_strategy(g, scripted("cycle_one_round"), K3, 1)) == "WinOnAllBranches(1)"


def test_c5_two_round_first_partition():
    g = cycle(5)
    s = GameState.start(g)
    move = scripted("c5_two_round").move_fn(s)
    w = g.next_id()
    v = {x: g.vertex(x) for x in ("v1", "v2", "v3", "v4", "v5")}
    assert move.parts[0] == {edge(w, v["v2"]), edge(w, v["v3"]), edge(v["v2"], v["v3"])}
    assert move.parts[1] == {edge(w, v["v1"]), edge(v["v1"], v["v5"]), edge(v["v5"], v["v4"]), edge(v["v4"], w)}


def test_rho4_round_one_matching():
    g = rho4_seed()
    move = rho4_round_one(GameState.start(g))
    names = sorted(tuple(sorted((g.label(u), g.label(v)))) for u, v in move.matching)
    assert names == sorted(tuple(sorted((f"c{2 * i - 1}", f"c{2 * i}"))) for i in range(1, 9))


def test_rho4_three_round_verification():
    out = verify_strategy(rho4_seed(), scripted("rho4_three_round"), K4, 3)
    assert isinstance(out, WinOnAllBranches) and out.t_max == 3
    assert len(out.leaves) == 8
    assert all(is_win(s, K4) and s.round == 3 for s in out.leaves)
    assert len({tuple(c for _, c in s.transcript) for s in out.leaves}) == 8


@pytest.mark.parametrize("name, seed, target, rounds, t", [
    ("path_one_round", path(6), K3, 1, 1),
    ("path_one_round", path(9), K3, 1, 1),
    ("cycle_one_round", cycle(4), K3, 1, 1),
    ("cycle_one_round", cycle(11), K3, 1, 1),
    ("c5_two_round", cycle(5), K3, 2, 2),
    ("fan_h_round", fan_h(), SupportedPairTarget(3), 1, 1),
])
def test_every_script_wins_on_all_branches(name, seed, target, rounds, t):
    out = verify_strategy(seed, scripted(name), target, rounds)
    assert str(out) == f"WinOnAllBranches({t})"
    for leaf in out.leaves:
        # replay through the engine reproduces the same graph
        assert replay(seed, format_transcript(leaf.transcript))[-1].graph == leaf.graph


def test_scripts_accept_relabeled_seeds():
    assert str(verify_strategy(shuffled(cycle(7), 1), scripted("cycle_one_round"), K3, 1)) == "WinOnAllBranches(1)"
    assert str(verify_strategy(shuffled(fan_h(), 2), scripted("fan_h_round"), SupportedPairTarget(3), 1)) \
        == "WinOnAllBranches(1)"
    assert str(verify_strategy(shuffled(rho4_seed(), 3), scripted("rho4_three_round"), K4, 3)) \
        == "WinOnAllBranches(3)"
    assert family_labeling(shuffled(fan_h(), 4), fan_h()) is not None
    assert family_labeling(cycle(6), fan_h()) is None


def test_family_guards():
    with pytest.raises(InvalidInput, match="seed outside family"):
        verify_strategy(path(5), scripted("path_one_round"), K3, 1)
    with pytest.raises(InvalidInput, match="seed outside family"):
        verify_strategy(cycle(5), scripted("cycle_one_round"), K3, 1)
    with pytest.raises(InvalidInput):
        verify_strategy(cycle(5), scripted("c5_two_round"), K3, 3)
    with pytest.raises(InvalidInput):
        scripted("nonsense")
    assert set(SCRIPTS) == {"path_one_round", "cycle_one_round", "c5_two_round", "fan_h_round", "rho4_three_round"}


def test_counterexample_when_rounds_run_out():
    out = verify_strategy(cycle(5), scripted("c5_two_round"), K3, 1)
    assert isinstance(out, Counterexample)
    assert len(out.transcript) == 1 and "no target" in out.reason
    # the rho4 script is not a K4 win in two rounds
    assert isinstance(verify_strategy(rho4_seed(), scripted("rho4_three_round"), K4, 2), Counterexample)


def test_play_policies():
    seed = cycle(5)
    strat = scripted("c5_two_round")
    assert len(play_strategy(seed, strat, K3, 2, "exhaustive")) >= 2
    (g,) = play_strategy(seed, strat, K3, 2, "greedy-avoid")
    assert g.round == 2 and is_win(g, K3)
    a = play_strategy(seed, strat, K3, 2, "random", rng=7)
    b = play_strategy(seed, strat, K3, 2, "random", rng=7)
    assert a == b and is_win(a[0], K3)
    with pytest.raises(InvalidInput):
        play_strategy(seed, strat, K3, 2, "sneaky")


def test_rho4_round_one_sides_are_h():
    s = GameState.start(rho4_seed())
    move = rho4_round_one(s)
    h = canonical_form(fan_h())
    assert all(canonical_form(play_round(s, move, c).graph) == h for c in (0, 1))
