import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowrc.errors import (
    DuplicateEdge,
    LoopEdge,
    MalformedHeader,
    NoEvenCycle,
    NotTwoConnected,
    VertexOutOfRange,
)
from rainbowrc.graph import (
    Cycle,
    Graph,
    find_even_cycle,
    is_two_connected,
    parse_edge_list,
    serialize_edge_list,
)
from rainbowrc.oracle import all_graphs

from helpers import (
    all_cycles,
    all_labeled_graphs,
    brute_two_connected,
    c5_chord,
    complete_graph,
    cycle_graph,
    path_graph,
)


def test_parse_triangle():
    g = parse_edge_list("3 3\n0 1\n1 2\n2 0")
    assert g == complete_graph(3)
    assert g.adjacency == ((1, 2), (0, 2), (0, 1))


def test_parse_single_edge():
    g = parse_edge_list("2 1\n0 1")
    assert g.n == 2 and g.sorted_edges() == [(0, 1)]


def test_parse_comments_and_trailing_newline():
    g = parse_edge_list("# a path\n3 2\n0 1\n# middle\n1 2\n")
    assert g == path_graph(3)


@pytest.mark.parametrize("text, error", [
    ("3 1\n0 3", VertexOutOfRange),
    ("3 2\n0 1\n1 0", DuplicateEdge),
    ("3 1\n1 1", LoopEdge),
    ("3\n0 1", MalformedHeader),
    ("x y\n0 1", MalformedHeader),
    ("3 2\n0 1", MalformedHeader),
    ("", MalformedHeader),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_edge_list(text)


def test_graph_rejects_bad_edges():
    with pytest.raises(LoopEdge):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(DuplicateEdge):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(VertexOutOfRange):
        Graph.from_edges(2, [(0, 2)])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(graphs())
def test_serialize_roundtrip(g):
    assert parse_edge_list(serialize_edge_list(g)) == g


@given(graphs())
def test_adjacency_is_symmetric_closure(g):
    arcs = {(u, v) for u in range(g.n) for v in g.adjacency[u]}
    assert arcs == {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}


@pytest.mark.parametrize("g, expected", [
    (cycle_graph(4), True),
    (path_graph(3), False),
    (Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]), False),
    (complete_graph(2), False),
    (Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (3, 5)]), False),
])
def test_is_two_connected_examples(g, expected):
    assert is_two_connected(g) is expected


@pytest.mark.parametrize("n", range(1, 6))
def test_is_two_connected_matches_vertex_deletion_labeled(n):
    for g in all_labeled_graphs(n):
        assert is_two_connected(g) == brute_two_connected(g), g


@pytest.mark.parametrize("n", [6, 7])
def test_is_two_connected_matches_vertex_deletion_unlabeled(n):
    for g in all_graphs(n):
        assert is_two_connected(g) == brute_two_connected(g), g


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_is_two_connected_matches_brute_force_random(g):
    assert is_two_connected(g) == brute_two_connected(g)


def test_even_cycle_of_c4_is_itself():
    assert find_even_cycle(cycle_graph(4)) == Cycle((0, 1, 2, 3))


def test_even_cycle_of_c5_with_chord():
    g = c5_chord()
    even = [c for c in all_cycles(g) if len(c) % 2 == 0]
    assert even == [(0, 2, 3, 4)]
    assert find_even_cycle(g).vertices == (0, 2, 3, 4)


def test_even_cycle_errors():
    with pytest.raises(NoEvenCycle):
        find_even_cycle(complete_graph(3))
    with pytest.raises(NoEvenCycle):
        find_even_cycle(cycle_graph(7))
    with pytest.raises(NotTwoConnected):
        find_even_cycle(path_graph(4))


@pytest.mark.parametrize("n", range(4, 8))
def test_even_cycle_valid_on_all_two_connected(n):
    for g in all_graphs(n):
        if not is_two_connected(g):
            continue
        if g.m == n and n % 2:
            continue  # odd cycles have no even cycle
        c = find_even_cycle(g)
        assert len(c) % 2 == 0
        assert c.is_valid_in(g)
        assert c.vertices == c.normalized().vertices


def test_cycle_type_invariants():
    with pytest.raises(ValueError):
        Cycle((0, 1))
    with pytest.raises(ValueError):
        Cycle((0, 1, 0))
    assert not Cycle((0, 1, 2)).is_valid_in(path_graph(3))
