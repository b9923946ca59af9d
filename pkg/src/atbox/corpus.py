"""Deterministic graph corpora for property checks and the acceptance suite."""

from __future__ import annotations

import random

from .generators import GraphFamilySpec, generate
from .graph import Graph
from .invariants import has_claw, is_at_free


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def unit_interval_graph(rng: random.Random, n: int) -> Graph:
    """Intersection graph of equal-length intervals with random integer starts."""
    length = rng.randrange(1, 4)
    starts = [rng.randrange(2 * n) for _ in range(n)]
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if abs(starts[u] - starts[v]) <= length])


def _spec_stream(rng: random.Random, max_n: int):
    while True:
        kind = rng.randrange(8)
        seed = rng.getrandbits(32)
        if kind in (0, 1):
            yield GraphFamilySpec("permutation", (rng.randint(3, max_n),), seed)
        elif kind in (2, 3):
            yield GraphFamilySpec("random_interval", (rng.randint(3, max_n),), seed)
        elif kind == 4:
            t = rng.randint(2, max(2, max_n // 3))
            yield GraphFamilySpec("girth5_atfree", (t, rng.randint(0, max_n - t)), seed)
        elif kind == 5:
            parts = [rng.randint(1, 3) for _ in range(rng.randint(2, 4))]
            yield GraphFamilySpec("complete_multipartite", tuple(parts), seed)
        elif kind == 6:
            yield GraphFamilySpec("star", (rng.randint(1, max_n - 1),), seed)
        else:
            family = rng.choice(["cycle", "path", "matching_complement"])
            if family == "cycle":
                yield GraphFamilySpec("cycle", (rng.randint(3, 5),), seed)
            elif family == "path":
                yield GraphFamilySpec("path", (rng.randint(1, max_n),), seed)
            else:
                yield GraphFamilySpec("matching_complement", (2 * rng.randint(1, max(1, max_n // 2)),), seed)


def at_free_corpus(count: int, max_n: int = 25, seed: int = 0) -> list[Graph]:
    """``count`` AT-free graphs with at most ``max_n`` vertices, mixed families."""
    rng = random.Random(seed)
    out: list[Graph] = []
    for spec in _spec_stream(rng, max_n):
        if len(out) == count:
            break
        G = generate(spec)
        if G.n <= max_n and is_at_free(G):
            out.append(G)
    return out


def claw_free_at_free_corpus(count: int, max_n: int = 20, seed: int = 0) -> list[Graph]:
    rng = random.Random(seed)
    out: list[Graph] = []
    while len(out) < count:
        pick = rng.randrange(3)
        n = rng.randint(2, max_n)
        if pick == 0:
            G = unit_interval_graph(rng, n)
        elif pick == 1:
            G = generate(GraphFamilySpec("permutation", (rng.randint(3, 9),), rng.getrandbits(32)))
        else:
            sizes = tuple(rng.randint(1, 2) for _ in range(rng.randint(2, 5)))
            G = generate(GraphFamilySpec("complete_multipartite", sizes))
        if G.n <= max_n and not has_claw(G) and is_at_free(G):
            out.append(G)
    return out


def small_random_graphs(count: int, max_n: int = 7, seed: int = 0, min_n: int = 1) -> list[Graph]:
    rng = random.Random(seed)
    return [
        random_graph(rng, rng.randint(min_n, max_n), rng.choice([0.2, 0.35, 0.5, 0.65, 0.8]))
        for _ in range(count)
    ]
