"""Small hand-checkable cases across modules."""

import pytest

import oracles
from atbox.boxrep import box_upper, chromatic_boxrep, girth5_boxrep, verify
from atbox.decompose import decompose
from atbox.generators import GraphFamilySpec, generate
from atbox.graph import Graph, complete_graph, complete_multipartite, cycle_graph, matching_complement, path_graph, star_graph
from atbox.invariants import (
    Coloring,
    claw_number,
    color,
    diametral_dominating_pair,
    find_asteroidal_triple,
    is_at_free,
    is_chordal,
    is_dominating_pair,
    is_interval,
    is_unit_interval,
)
from atbox.triangulate import (
    NotIntervalError,
    clique_path_order,
    interval_model,
    is_minimal_triangulation,
    maximal_cliques_chordal,
    minimize_triangulation,
    split_supergraph,
)


def _pairs(model):
    return [(iv.lo, iv.hi) for iv in model]


def test_four_cycle_witness():
    check = is_chordal(cycle_graph(4))
    assert not check and check.witness == [0, 1, 2, 3]


def test_k222_not_chordal_but_at_free():
    G = complete_multipartite([2, 2, 2])
    assert not is_chordal(G)
    assert is_at_free(G)
    assert not is_unit_interval(matching_complement(6))


def test_random_interval_graphs_have_no_triple():
    for seed in range(20):
        assert find_asteroidal_triple(generate(GraphFamilySpec("random_interval", (12,), seed))) is None


def test_dominating_pairs_on_small_graphs(c5):
    P4 = path_graph(4)
    assert is_dominating_pair(P4, 0, 3)
    # the only 1-2 path is the edge itself, and 0, 3 each neighbour one end
    assert is_dominating_pair(P4, 1, 2)
    assert oracles.is_dominating_pair(P4, 1, 2)
    spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert not is_dominating_pair(spider, 2, 4)  # path 2-1-0-3-4 misses 6
    for x in range(5):
        for y in range(5):
            if x < y and not c5.has_edge(x, y):
                assert is_dominating_pair(c5, x, y)
    assert diametral_dominating_pair(P4) == (0, 3, [0, 1, 2, 3])
    x, y, path = diametral_dominating_pair(star_graph(4))
    assert len(path) == 3 and path[1] == 0 and {x, y} <= {1, 2, 3, 4}


@pytest.mark.parametrize("n", range(2, 7))
def test_complete_graph_claw_number(n):
    assert claw_number(complete_graph(n))[0] == 1


def test_bipartite_generated_graphs_two_colours():
    for seed in range(5):
        G = generate(GraphFamilySpec("girth5_atfree", (6, 0), seed))  # a path: bipartite
        assert color(G, "exact").k <= 2
    assert color(cycle_graph(5), "exact").k == 3


def test_caterpillar_is_interval():
    G = Graph(7, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (2, 6)])
    assert is_chordal(G) and is_at_free(G) and is_interval(G)


# split supergraphs and minimal triangulations -------------------------------------


def test_split_supergraph_k222_and_edgeless():
    G = complete_multipartite([2, 2, 2])
    coloring = color(G, "exact")
    H = split_supergraph(G, coloring, 0)
    added = H.edges - G.edges
    assert len(added) == 2
    assert all(coloring.colors[u] == coloring.colors[v] != 0 for u, v in added)
    E3 = Graph(3)
    assert split_supergraph(E3, Coloring.from_colors([0, 0, 0]), 0) == E3


def test_minimize_from_complete_graph():
    c4 = cycle_graph(4)
    assert len(minimize_triangulation(c4, complete_graph(4)).fill) == 1
    c5 = cycle_graph(5)
    fill = minimize_triangulation(c5, complete_graph(5)).fill
    assert len(fill) == 2
    (a, b), (c, d) = sorted(fill)
    assert len({a, b} & {c, d}) == 1  # a fan: both chords share a vertex
    chordal = path_graph(4)
    assert minimize_triangulation(chordal, chordal).fill == frozenset()


def test_minimality_small_cases(c5):
    assert is_minimal_triangulation(path_graph(3), path_graph(3))
    assert not is_minimal_triangulation(cycle_graph(4), complete_graph(4))
    assert is_minimal_triangulation(c5, c5.add_edges([(0, 2), (0, 3)]))


def test_cliques_and_models():
    assert maximal_cliques_chordal(path_graph(3)) == [(0, 1), (1, 2)]
    assert maximal_cliques_chordal(complete_graph(4)) == [(0, 1, 2, 3)]
    assert _pairs(interval_model(path_graph(3))) == [(1, 1), (1, 2), (2, 2)]
    assert _pairs(interval_model(complete_graph(4))) == [(1, 1)] * 4
    assert clique_path_order(path_graph(4)).cliques == ((0, 1), (1, 2), (2, 3))
    assert len(clique_path_order(star_graph(3)).cliques) == 3
    with pytest.raises(NotIntervalError):
        clique_path_order(cycle_graph(5))


# decomposition and box representations ------------------------------------------------


def test_decompose_p4():
    D = decompose(path_graph(4))
    assert D.t == 4 and all(not members for members in D.classes.values())


def test_single_vertex_girth5_model():
    R = girth5_boxrep(Graph(1))
    assert _pairs(R.dims[0]) == [(1, 2)]
    assert _pairs(R.dims[1]) == [(1, 2)]


def test_chromatic_c5_uses_three_dimensions(c5):
    R = chromatic_boxrep(c5, color(c5, "exact"))
    assert R.dimension == 3
    assert verify(c5, R) == []


def test_chordal_graph_with_many_colours():
    G = path_graph(5)
    R = chromatic_boxrep(G, Coloring.from_colors([0, 1, 2, 0, 1]))
    assert R.dimension == 3 and verify(G, R) == []


def test_box_upper_p6():
    bound = box_upper(path_graph(6))
    assert (bound.k, bound.method) == (1, "interval")
