import itertools

import pytest
from hypothesis import given, settings

import oracles
from atbox.corpus import at_free_corpus
from atbox.graph import Graph, complete_multipartite, cycle_graph, path_graph, star_graph
from atbox.invariants import Coloring, InvariantError, best_coloring, color, is_at_free, is_chordal, is_interval
from atbox.triangulate import (
    NotIntervalError,
    TriangulationError,
    clique_path_order,
    interval_model,
    is_minimal_triangulation,
    maximal_cliques_chordal,
    minimality_report,
    minimize_triangulation,
    split_supergraph,
)
from strategies import graphs


def test_split_supergraph_c5(c5):
    coloring = Coloring.from_colors([0, 1, 0, 1, 2])
    H = split_supergraph(c5, coloring, 2)
    assert sorted(H.edges - c5.edges) == [(0, 2), (0, 3), (1, 3)]
    assert is_chordal(H)


def test_split_supergraph_rejects_bad_input(c5):
    with pytest.raises(InvariantError):
        split_supergraph(c5, Coloring.from_colors([0, 0, 1, 0, 1]), 0)
    with pytest.raises(InvariantError):
        split_supergraph(c5, Coloring.from_colors([0, 1, 0, 1, 2]), 3)


@given(graphs(max_n=8))
def test_split_supergraph_is_chordal_supergraph(G):
    coloring = color(G)
    for i in range(coloring.k):
        H = split_supergraph(G, coloring, i)
        assert G.is_subgraph_of(H)
        assert is_chordal(H)


def test_minimize_c5_from_split(c5):
    H = split_supergraph(c5, Coloring.from_colors([0, 1, 0, 1, 2]), 2)
    result = minimize_triangulation(c5, H)
    # (0,2) goes first: its ends share {1,3}, a clique; then nothing else drops
    assert sorted(result.fill) == [(0, 3), (1, 3)]
    assert is_minimal_triangulation(c5, result.graph)


def test_minimize_rejects_non_chordal_or_non_supergraph(c5):
    with pytest.raises(TriangulationError):
        minimize_triangulation(c5, c5)
    with pytest.raises(TriangulationError):
        minimize_triangulation(c5, path_graph(5))


def test_minimize_keeps_already_chordal_graph():
    G = star_graph(4)
    H = split_supergraph(G, best_coloring(G), 1)
    assert minimize_triangulation(G, H).fill == frozenset()


def test_non_minimal_triangulation_detected(c5):
    H = split_supergraph(c5, Coloring.from_colors([0, 1, 0, 1, 2]), 2)
    assert not is_minimal_triangulation(c5, H)
    report = minimality_report(c5, H)
    assert [c.edge for c in report if c.removable] == [(0, 2), (1, 3)]
    assert all(c.unique_chord != c.removable for c in report)


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_minimize_matches_exhaustive_minimality(G):
    coloring = color(G)
    for i in range(coloring.k):
        H = minimize_triangulation(G, split_supergraph(G, coloring, i)).graph
        assert is_minimal_triangulation(G, H)
        assert oracles.is_minimal_triangulation(G, H)


@given(graphs(max_n=7))
def test_at_free_minimal_triangulations_are_interval(G):
    if not is_at_free(G):
        return
    coloring = color(G)
    for i in range(coloring.k):
        H = minimize_triangulation(G, split_supergraph(G, coloring, i)).graph
        assert is_interval(H)


# cliques and interval models -------------------------------------------------------


def test_maximal_cliques_fan():
    H = cycle_graph(5).add_edges([(0, 2), (0, 3)])
    assert maximal_cliques_chordal(H) == [(0, 1, 2), (0, 2, 3), (0, 3, 4)]


def test_maximal_cliques_rejects_cycle(c5):
    with pytest.raises(TriangulationError):
        maximal_cliques_chordal(c5)


def test_clique_path_fan():
    H = cycle_graph(5).add_edges([(0, 2), (0, 3)])
    path = clique_path_order(H).cliques
    assert path in ([(0, 1, 2), (0, 2, 3), (0, 3, 4)], ((0, 1, 2), (0, 2, 3), (0, 3, 4)))
    model = interval_model(H)
    assert [(iv.lo, iv.hi) for iv in model] == [(1, 3), (1, 1), (1, 2), (2, 3), (3, 3)]


def test_clique_path_rejects_non_interval():
    spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert is_chordal(spider)
    with pytest.raises(NotIntervalError):
        clique_path_order(spider)


def _consecutive(path, v):
    hits = [k for k, clique in enumerate(path) if v in clique]
    return hits == list(range(hits[0], hits[-1] + 1))


@given(graphs(max_n=8))
def test_interval_model_reproduces_graph(G):
    if not is_interval(G):
        with pytest.raises(NotIntervalError):
            interval_model(G)
        return
    path = clique_path_order(G).cliques
    assert all(_consecutive(path, v) for v in range(G.n))
    assert interval_model(G).intersection_graph() == G


def test_interval_model_on_corpus():
    for G in at_free_corpus(40, max_n=25, seed=11):
        H = minimize_triangulation(G, split_supergraph(G, best_coloring(G), 0)).graph
        assert interval_model(H).intersection_graph() == H


def test_interval_model_examples():
    for G in (path_graph(6), star_graph(5), complete_multipartite([1, 1, 1]), Graph(3)):
        assert interval_model(G).intersection_graph() == G
    assert len(interval_model(Graph(0))) == 0


def test_maximal_cliques_brute_force():
    H = complete_multipartite([2, 1, 1]).add_edges([(0, 1)])
    cliques = maximal_cliques_chordal(H)
    expected = []
    for size in range(H.n, 0, -1):
        for subset in itertools.combinations(range(H.n), size):
            if all(H.has_edge(a, b) for a, b in itertools.combinations(subset, 2)):
                if not any(set(subset) < set(e) for e in expected):
                    expected.append(subset)
    assert sorted(cliques) == sorted(expected)
