import random

import pytest
from hypothesis import given

from atbox.graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    bfs_layers,
    complete_multipartite,
    connected_components,
    cycle_graph,
    from_graph6,
    girth,
    matching_complement,
    parse_edge_list,
    path_graph,
    star_graph,
    to_edge_list,
    to_graph6,
)
from strategies import graphs


def test_parse_c5(c5):
    G = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0")
    assert G == c5
    assert G.m == 5


def test_parse_single_vertex():
    G = parse_edge_list("1 0")
    assert G.n == 1 and G.m == 0


def test_parse_self_loop_names_line():
    with pytest.raises(GraphError, match="line 2: self-loop"):
        parse_edge_list("3 1\n0 0")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("3 1\n0 5", "line 2: endpoint out of range"),
        ("3 2\n0 1", "declares 2 edges"),
        ("3 1\n0 x", "line 2: expected two integers"),
        ("three", "line 1"),
        ("", "line 1"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(GraphError, match=fragment):
        parse_edge_list(text)


def test_parse_collapses_duplicates():
    G = parse_edge_list("3 3\n0 1\n1 0\n1 2")
    assert G.sorted_edges() == [(0, 1), (1, 2)]


def test_edge_list_round_trip(c5):
    assert parse_edge_list(to_edge_list(c5)) == c5


def test_graph_invariants():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    G = Graph(3, [(2, 0)])
    assert G.has_edge(0, 2) and G.has_edge(2, 0)


# graph6 -------------------------------------------------------------------


def test_graph6_c5_cycle_order(c5):
    # upper-triangle bits in column order: 1 01 001 1001 -> 101001 100100
    assert to_graph6(c5) == "Dhc"


def test_graph6_dqk_is_a_relabelled_five_cycle():
    G = from_graph6("DqK")
    assert G.sorted_edges() == [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)]
    assert all(G.degree(v) == 2 for v in range(5))
    assert len(connected_components(G)) == 1
    assert to_graph6(G) == "DqK"


def test_graph6_edgeless():
    G = from_graph6("D??")
    assert G.n == 5 and G.m == 0


def test_graph6_header_and_errors():
    assert from_graph6(">>graph6<<Dhc") == cycle_graph(5)
    with pytest.raises(GraphError, match="invalid graph6 byte"):
        from_graph6("D\x10c")
    with pytest.raises(GraphError, match="truncated"):
        from_graph6("Dh")


def test_graph6_round_trip_random():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(0, 20)
        G = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        assert from_graph6(to_graph6(G)) == G


@given(graphs(max_n=12))
def test_graph6_round_trip_property(G):
    assert from_graph6(to_graph6(G)) == G


def test_graph6_long_form():
    G = path_graph(70)
    assert from_graph6(to_graph6(G)) == G


# metrics -------------------------------------------------------------------


def test_bfs_layers(c5):
    assert bfs_layers(c5, 0) == [0, 1, 2, 2, 1]
    assert bfs_layers(path_graph(4), 0) == [0, 1, 2, 3]
    assert bfs_layers(Graph(4, [(0, 1), (2, 3)]), 0) == [0, 1, UNREACHABLE, UNREACHABLE]


def test_girth_examples(c5):
    assert girth(c5) == 5
    assert girth(complete_multipartite([2, 2, 2])) == 3
    assert girth(star_graph(4)) is None


@pytest.mark.parametrize("n", range(3, 13))
def test_girth_of_cycles(n):
    assert girth(cycle_graph(n)) == n


def test_girth_of_random_trees():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 25)
        tree = Graph(n, [(v, rng.randrange(v)) for v in range(1, n)])
        assert girth(tree) is None


def test_components(c5):
    assert connected_components(c5) == [[0, 1, 2, 3, 4]]
    assert connected_components(Graph(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]
    assert connected_components(Graph(3)) == [[0], [1], [2]]


def test_named_graphs():
    K = complete_multipartite([2, 2, 2])
    assert K.n == 6 and K.m == 12
    assert matching_complement(6) == K
