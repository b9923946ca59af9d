import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from atbox.corpus import at_free_corpus, claw_free_at_free_corpus, small_random_graphs
from atbox.generators import GraphFamilySpec, generate, girth5_atfree_graph
from atbox.graph import GraphError, complete_multipartite, girth
from atbox.invariants import has_claw, is_at_free


def test_complete_multipartite_counts():
    G = generate(GraphFamilySpec("complete_multipartite", (2, 2, 2)))
    assert (G.n, G.m) == (6, 12)


def test_matching_complement_is_k222():
    assert generate(GraphFamilySpec("matching_complement", (6,))) == complete_multipartite([2, 2, 2])


def test_permutation_seed_one_is_at_free():
    G = generate(GraphFamilySpec("permutation", (5,), 1))
    assert oracles.asteroidal_triples(G) == []
    assert is_at_free(G)


@pytest.mark.parametrize(
    "family, params",
    [
        ("cycle", (2,)),
        ("cycle", ()),
        ("matching_complement", (5,)),
        ("complete_multipartite", ()),
        ("complete_multipartite", (2, 0)),
        ("girth5_atfree", (0, 3)),
        ("girth5_atfree", (3, 3, 3)),
        ("nonsense", (3,)),
    ],
)
def test_invalid_specs(family, params):
    with pytest.raises(GraphError):
        GraphFamilySpec(family, params)


def test_invalid_seed():
    with pytest.raises(GraphError):
        GraphFamilySpec("path", (3,), -1)
    with pytest.raises(GraphError):
        GraphFamilySpec("path", (3,), 2**64)


def test_girth5_defaults():
    G = generate(GraphFamilySpec("girth5_atfree", (), 11))
    assert G.n >= 8
    assert generate(GraphFamilySpec("girth5_atfree", (8, 8), 11)) == G


@given(st.sampled_from(["permutation", "random_interval", "girth5_atfree"]), st.integers(0, 2**64 - 1))
def test_generate_is_deterministic(family, seed):
    params = (6, 5) if family == "girth5_atfree" else (9,)
    spec = GraphFamilySpec(family, params, seed)
    assert generate(spec) == generate(spec)


@given(st.integers(3, 12), st.integers(0, 2**32))
def test_permutation_graphs_are_at_free(n, seed):
    assert is_at_free(generate(GraphFamilySpec("permutation", (n,), seed)))


@given(st.integers(2, 12), st.integers(0, 2**32))
def test_random_interval_graphs_are_at_free(n, seed):
    assert is_at_free(generate(GraphFamilySpec("random_interval", (n,), seed)))


def test_girth5_family_passes_both_predicates():
    rng = random.Random(0)
    for _ in range(50):
        t, extra = rng.randint(1, 12), rng.randint(0, 25)
        G = girth5_atfree_graph(rng, t, extra)
        g = girth(G)
        assert g is None or g >= 5
        assert is_at_free(G)
        assert G.n <= t + extra


def test_girth5_small_matches_brute_force():
    rng = random.Random(1)
    for _ in range(30):
        G = girth5_atfree_graph(rng, rng.randint(1, 4), rng.randint(0, 4))
        assert oracles.asteroidal_triples(G) == []


def test_corpora():
    graphs = at_free_corpus(30, max_n=15, seed=4)
    assert len(graphs) == 30
    assert all(G.n <= 15 and is_at_free(G) for G in graphs)
    assert at_free_corpus(30, max_n=15, seed=4) == graphs
    claw_free = claw_free_at_free_corpus(20, max_n=12, seed=4)
    assert all(not has_claw(G) and is_at_free(G) for G in claw_free)
    small = small_random_graphs(25, max_n=7, seed=4)
    assert len(small) == 25 and all(1 <= G.n <= 7 for G in small)
