"""Deterministic graph-family generators."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    complete_multipartite,
    cycle_graph,
    girth,
    matching_complement,
    path_graph,
    star_graph,
)
from .invariants import is_at_free

FAMILIES = (
    "cycle",
    "path",
    "complete_multipartite",
    "matching_complement",
    "star",
    "permutation",
    "random_interval",
    "girth5_atfree",
)

GIRTH5_RETRY_BUDGET = 200
GIRTH5_DEFAULT_T = 8


class GenerationError(GraphError):
    pass


@dataclass(frozen=True)
class GraphFamilySpec:
    """``family`` tag, integer ``params`` and a 64-bit ``seed``.

    Parameters per family:

    * cycle [n], path [n], star [k], matching_complement [n]
    * complete_multipartite [size, size, ...]
    * permutation [n], random_interval [n]
    * girth5_atfree [t, extra]: dominating path of t vertices plus up to
      ``extra`` off-path vertices; both optional (defaults t = 8, extra = t)
    """

    family: str
    params: tuple[int, ...] = ()
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        validate_spec(self)


def validate_spec(spec: GraphFamilySpec) -> None:
    fam, p = spec.family, spec.params
    if fam not in FAMILIES:
        raise GraphError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")
    if not 0 <= spec.seed < 2**64:
        raise GraphError("seed must be a 64-bit unsigned integer")

    def need(count: int) -> None:
        if len(p) != count:
            raise GraphError(f"family {fam} takes {count} parameter(s), got {len(p)}")

    if fam == "cycle":
        need(1)
        if p[0] < 3:
            raise GraphError("cycle length must be at least 3")
    elif fam in ("path", "permutation", "random_interval"):
        need(1)
        if p[0] < 1:
            raise GraphError(f"{fam} needs at least one vertex")
    elif fam == "star":
        need(1)
        if p[0] < 0:
            raise GraphError("star size must be non-negative")
    elif fam == "matching_complement":
        need(1)
        if p[0] < 2 or p[0] % 2:
            raise GraphError("matching_complement size must be even and at least 2")
    elif fam == "complete_multipartite":
        if not p or any(size < 1 for size in p):
            raise GraphError("complete_multipartite needs one positive size per part")
    elif fam == "girth5_atfree":
        if len(p) > 2:
            raise GraphError(f"family {fam} takes at most 2 parameters, got {len(p)}")
        t, extra = _girth5_params(p)
        if t < 1 or extra < 0:
            raise GraphError("girth5_atfree needs t >= 1 and extra >= 0")


def generate(spec: GraphFamilySpec) -> Graph:
    validate_spec(spec)
    fam, p = spec.family, spec.params
    rng = random.Random(spec.seed)
    if fam == "cycle":
        return cycle_graph(p[0])
    if fam == "path":
        return path_graph(p[0])
    if fam == "star":
        return star_graph(p[0])
    if fam == "matching_complement":
        return matching_complement(p[0])
    if fam == "complete_multipartite":
        return complete_multipartite(list(p))
    if fam == "permutation":
        return permutation_graph(rng, p[0])
    if fam == "random_interval":
        return random_interval_graph(rng, p[0])
    return girth5_atfree_graph(rng, *_girth5_params(p))


def _girth5_params(p: tuple[int, ...]) -> tuple[int, int]:
    t = p[0] if p else GIRTH5_DEFAULT_T
    return t, p[1] if len(p) > 1 else t


def permutation_graph(rng: random.Random, n: int) -> Graph:
    """i < j adjacent iff the permutation inverts them."""
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]])


def random_interval_graph(rng: random.Random, n: int, span: int | None = None) -> Graph:
    span = span or 3 * n
    ivs = []
    for _ in range(n):
        a = rng.randrange(span)
        b = a + rng.randrange(1, max(2, span // 4))
        ivs.append((a, b))
    return Graph(
        n,
        [(u, v) for u in range(n) for v in range(u + 1, n) if ivs[u][0] <= ivs[v][1] and ivs[v][0] <= ivs[u][1]],
    )


def _girth5_candidate(rng: random.Random, t: int, extra: int) -> Graph:
    n = t
    edges = [(i, i + 1) for i in range(t - 1)]
    budget = extra
    last = -2
    bypassed: list[int] = []
    for i in range(t - 2):
        # overlapping class pairs (i, i+2), (i+1, i+3) always create an AT
        if budget < 2 or i < last + 2 or rng.random() < 0.5:
            continue
        last = i
        bypassed.append(i)
        # fresh endpoints: reusing one would give it both side neighbours,
        # which always yields an AT
        a, b = n, n + 1
        n += 2
        budget -= 2
        edges += [(i, a), (i + 2, b), (a, b)]
    # a pendant on the middle vertex of a bypassed stretch forms an AT
    hosts = [i for i in range(t) if i - 1 not in bypassed]
    while budget > 0:
        edges.append((rng.choice(hosts), n))
        n += 1
        budget -= 1
    return Graph(n, edges)


def girth5_atfree_graph(rng: random.Random, t: int, extra: int) -> Graph:
    """Dominating path plus pendants and sparse S_i - S_{i+2} edges.

    Candidates are rejected until both the AT-free and girth >= 5 checks
    pass, so every output is sound regardless of how candidates are drawn.
    """
    for _ in range(GIRTH5_RETRY_BUDGET):
        G = _girth5_candidate(rng, t, extra)
        g = girth(G)
        if (g is None or g >= 5) and is_at_free(G):
            return G
    raise GenerationError(
        f"girth5_atfree(t={t}, extra={extra}) found no valid graph in {GIRTH5_RETRY_BUDGET} attempts"
    )
