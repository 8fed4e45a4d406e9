import random

import pytest

from rainbowrc.decomposition import (
    Ear,
    EarDecomposition,
    ear_decomposition,
    find_longest_ear,
    stage_subgraph,
    validate_decomposition,
)
from rainbowrc.errors import BudgetExceeded, NoEar, NoEvenCycle, NotTwoConnected
from rainbowrc.graph import Cycle, is_two_connected
from rainbowrc.oracle import all_graphs, random_two_connected

from helpers import all_ears, c5_chord, complete_graph, cycle_graph, path_graph, theta_graph


def test_longest_ear_c5_chord():
    g = c5_chord()
    base = Cycle((0, 2, 3, 4))
    assert all_ears(g, base.vertices, base.edges()) == [(0, 1, 2)]
    ear = find_longest_ear(g, base.vertices, base.edges())
    assert ear.vertices == (0, 1, 2) and ear.length == 2


def test_longest_ear_k4_lexicographic_tie():
    g = complete_graph(4)
    tri = [(0, 1), (1, 2), (0, 2)]
    ears = all_ears(g, {0, 1, 2}, tri)
    assert ears == [(0, 3, 1), (0, 3, 2), (1, 3, 2)]
    assert find_longest_ear(g, {0, 1, 2}, tri).vertices == (0, 3, 1)


def test_longest_ear_no_ear():
    g = cycle_graph(5)
    with pytest.raises(NoEar):
        find_longest_ear(g, range(5), g.edges)


def test_longest_ear_budget_is_explicit():
    g = cycle_graph(12).with_edges([(0, 6)])
    with pytest.raises(BudgetExceeded):
        find_longest_ear(g, {0, 6}, [], budget=2)


def _stage_sets(g, rng):
    """A random nonseparable proper subgraph: a prefix of the decomposition."""
    dec = ear_decomposition(g)
    i = rng.randint(0, dec.k - 1)
    return dec.stage(i)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_longest_ear_matches_enumeration_on_corpus(n):
    rng = random.Random(n)
    for g in all_graphs(n):
        if not is_two_connected(g) or g.m == n:
            continue
        verts, edges = _stage_sets(g, rng)
        ears = all_ears(g, verts, edges)
        best = max(len(e) for e in ears)
        expected = min(e for e in ears if len(e) == best)
        assert find_longest_ear(g, verts, edges).vertices == expected


def test_longest_ear_matches_enumeration_n8_random():
    rng = random.Random(8)
    for _ in range(40):
        g = random_two_connected(8, rng)
        if g.m == 8:
            continue
        verts, edges = _stage_sets(g, rng)
        ears = all_ears(g, verts, edges)
        best = max(len(e) for e in ears)
        assert find_longest_ear(g, verts, edges).length == best - 1


def test_decomposition_of_c6():
    dec = ear_decomposition(cycle_graph(6))
    assert dec.base.vertices == (0, 1, 2, 3, 4, 5)
    assert dec.ears == [] and dec.t == 0 and dec.k == 0


def test_decomposition_of_theta():
    dec = ear_decomposition(theta_graph())
    assert dec.base.vertices == (0, 2, 1, 3)
    assert [e.vertices for e in dec.ears] == [(0, 4, 1)]
    assert (dec.t, dec.k) == (1, 1)
    assert dec.stage_orders == [4, 5]


def test_decomposition_of_k4():
    dec = ear_decomposition(complete_graph(4))
    assert len(dec.base) == 4
    assert [e.length for e in dec.ears] == [1, 1]
    assert (dec.t, dec.k) == (0, 2)


def test_decomposition_errors():
    with pytest.raises(NotTwoConnected):
        ear_decomposition(path_graph(4))
    with pytest.raises(NoEvenCycle):
        ear_decomposition(cycle_graph(5))


def test_decomposition_json_roundtrip():
    dec = ear_decomposition(theta_graph())
    text = dec.to_json()
    assert text == '{"base": [0, 2, 1, 3], "ears": [{"vertices": [0, 4, 1]}], "t": 1}'
    back = EarDecomposition.from_json(text)
    assert back.base == dec.base and back.ears == dec.ears and back.t == dec.t


def _check(g, dec):
    assert validate_decomposition(g, dec) == []
    assert len(dec.base) + sum(e.length - 1 for e in dec.ears) == g.n
    lengths = [e.length for e in dec.ears]
    assert lengths == sorted(lengths, reverse=True)
    for i in range(dec.k + 1):
        verts, edges = dec.stage(i)
        assert is_two_connected(stage_subgraph(g, verts, edges))


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_decomposition_invariants_on_corpus(n):
    for g in all_graphs(n):
        if not is_two_connected(g) or (g.m == n and n % 2):
            continue
        _check(g, ear_decomposition(g))


def test_decomposition_invariants_random():
    rng = random.Random(2024)
    for _ in range(150):
        g = random_two_connected(rng.randint(8, 14), rng)
        try:
            dec = ear_decomposition(g)
        except NoEvenCycle:
            continue
        _check(g, dec)


def test_validator_flags_broken_decompositions():
    g = theta_graph()
    good = ear_decomposition(g)
    missing = EarDecomposition(good.base, [])
    assert "union of base and ears differs from the graph" in validate_decomposition(g, missing)
    bad_order = EarDecomposition(Cycle((0, 2, 1, 3)), [Ear((0, 4, 1))])
    assert validate_decomposition(g, bad_order) == []
    odd = EarDecomposition(Cycle((0, 2, 1)), [])
    problems = validate_decomposition(g, odd)
    assert any("odd" in p for p in problems) and any("non-edge" in p for p in problems)


def test_ear_type_invariants():
    with pytest.raises(ValueError):
        Ear((0,))
    with pytest.raises(ValueError):
        Ear((0, 1, 0))
    ear = Ear((2, 5, 7))
    assert ear.feet == (2, 7) and ear.length == 2 and ear.internal == (5,)
    assert ear.reversed().vertices == (7, 5, 2)
