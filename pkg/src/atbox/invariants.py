"""Recognition predicates and graph parameters.

Covers chordality (maximum-cardinality search), asteroidal triples,
dominating pairs, the claw number, proper colorings, and interval /
unit-interval recognition through the chordal + AT-free characterisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .graph import (
    Graph,
    GraphError,
    all_pairs_distances,
    components_avoiding,
    is_connected,
    iter_bits,
    shortest_path,
)

EXACT_COLOR_LIMIT = 16
CLAW_NEIGHBORHOOD_CAP = 64


class InvariantError(ValueError):
    """A predicate's precondition does not hold."""


# ---------------------------------------------------------------------------
# Chordality
# ---------------------------------------------------------------------------


class ChordalCheck(NamedTuple):
    """``(chordal, witness)``; truthiness follows ``chordal``.

    The witness is a perfect elimination ordering when chordal, otherwise a
    chordless cycle of length at least four.
    """

    chordal: bool
    witness: list[int]

    def __bool__(self) -> bool:
        return self.chordal


def maximum_cardinality_search(G: Graph) -> list[int]:
    """Visit order of MCS (ties to the smallest id). Reverse it for a PEO."""
    weight = [0] * G.n
    done = [False] * G.n
    order = []
    for _ in range(G.n):
        best = -1
        for v in range(G.n):
            if not done[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        done[best] = True
        order.append(best)
        for w in G.adj[best]:
            if not done[w]:
                weight[w] += 1
    return order


def is_perfect_elimination_ordering(G: Graph, order: Sequence[int]) -> bool:
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        later = [w for w in G.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        rest = 0
        for w in later:
            if w != parent:
                rest |= 1 << w
        if rest & ~G.masks[parent]:
            return False
    return True


def chordless_cycle(G: Graph) -> list[int] | None:
    """A chordless cycle of length >= 4, or None if G is chordal.

    For a centre v with non-adjacent neighbours a, b, a shortest a-b path
    avoiding the rest of N[v] closes an induced cycle through v.
    """
    for v in range(G.n):
        nbrs = sorted(G.adj[v])
        closed = G.masks[v] | (1 << v)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                if G.has_edge(a, b):
                    continue
                removed = closed & ~((1 << a) | (1 << b))
                keep = [u for u in range(G.n) if not (removed >> u) & 1]
                sub, labels = G.induced(keep)
                path = shortest_path(sub, labels.index(a), labels.index(b))
                if path is not None:
                    return [v] + [labels[p] for p in path]
    return None


def is_chordal(G: Graph) -> ChordalCheck:
    peo = maximum_cardinality_search(G)[::-1]
    if is_perfect_elimination_ordering(G, peo):
        return ChordalCheck(True, peo)
    cycle = chordless_cycle(G)
    if cycle is None:  # pragma: no cover - MCS and the cycle search disagree
        raise AssertionError("MCS rejected a graph with no chordless cycle")
    return ChordalCheck(False, cycle)


# ---------------------------------------------------------------------------
# Asteroidal triples and dominating pairs
# ---------------------------------------------------------------------------


def _closed_mask(G: Graph, v: int) -> int:
    return G.masks[v] | (1 << v)


def avoidance_labels(G: Graph) -> np.ndarray:
    """Row v labels the components of G - N[v]; -1 marks N[v]."""
    table = np.empty((G.n, G.n), dtype=np.int64)
    for v in range(G.n):
        table[v] = components_avoiding(G, _closed_mask(G, v))
    return table


def find_asteroidal_triple(G: Graph) -> tuple[int, int, int] | None:
    """Lexicographically first asteroidal triple, or None when G is AT-free."""
    n = G.n
    if n < 3:
        return None
    C = avoidance_labels(G)
    for a in range(n):
        row_a = C[a]
        for b in range(a + 1, n):
            if row_a[b] < 0:
                continue
            hit = (
                (row_a == row_a[b])
                & (C[b] == C[b, a])
                & (C[:, a] == C[:, b])
                & (C[:, a] >= 0)
            )
            hit[: b + 1] = False
            if hit.any():
                return (a, b, int(np.argmax(hit)))
    return None


def is_at_free(G: Graph) -> bool:
    return find_asteroidal_triple(G) is None


def is_dominating_pair(G: Graph, x: int, y: int) -> bool:
    """Every x-y path dominates G.

    Equivalent test: for each v whose closed neighbourhood misses both x and
    y, removing N[v] separates x from y.
    """
    if x == y:
        raise InvariantError("a dominating pair needs two distinct vertices")
    if not is_connected(G):
        raise InvariantError("dominating pairs are defined for connected graphs")
    for v in range(G.n):
        closed = _closed_mask(G, v)
        if (closed >> x) & 1 or (closed >> y) & 1:
            continue
        label = components_avoiding(G, closed)
        if label[x] == label[y]:
            return False
    return True


def diametral_dominating_pair(G: Graph) -> tuple[int, int, list[int]]:
    """First (lexicographic) dominating pair at diameter distance, with a path."""
    if G.n == 0:
        raise InvariantError("empty graph has no dominating pair")
    if not is_connected(G):
        raise InvariantError("dominating pairs are defined for connected graphs")
    if G.n == 1:
        return 0, 0, [0]
    dist = all_pairs_distances(G)
    diam = max(max(row) for row in dist)
    C = avoidance_labels(G)
    for x in range(G.n):
        for y in range(x + 1, G.n):
            if dist[x][y] != diam:
                continue
            # N[v] misses x and y exactly when both labels are >= 0
            col_x, col_y = C[:, x], C[:, y]
            if np.any((col_x >= 0) & (col_x == col_y)):
                continue
            path = shortest_path(G, x, y)
            assert path is not None
            return x, y, path
    raise InvariantError(
        "no diametral dominating pair: graph is not AT-free or an internal error occurred"
    )


# ---------------------------------------------------------------------------
# Claw number
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClawWitness:
    center: int
    leaves: tuple[int, ...]


def max_independent_subset(G: Graph, candidates: int) -> int:
    """Bitmask of a maximum independent set inside ``candidates``."""
    masks = G.masks
    best = 0
    best_size = 0

    def grow(chosen: int, size: int, pool: int) -> None:
        nonlocal best, best_size
        # vertices with no neighbour left in the pool are always taken
        while pool:
            free = 0
            for v in iter_bits(pool):
                if not masks[v] & pool:
                    free |= 1 << v
            if not free:
                break
            chosen |= free
            size += bin(free).count("1")
            pool &= ~free
        if not pool:
            if size > best_size:
                best, best_size = chosen, size
            return
        if size + bin(pool).count("1") <= best_size:
            return
        pivot = max(iter_bits(pool), key=lambda v: bin(masks[v] & pool).count("1"))
        grow(chosen | (1 << pivot), size + 1, pool & ~masks[pivot] & ~(1 << pivot))
        grow(chosen, size, pool & ~(1 << pivot))

    grow(0, 0, candidates)
    return best


def _greedy_interval_mis(vertices: list[int], model) -> list[int]:
    chosen: list[int] = []
    last = None
    for v in sorted(vertices, key=lambda u: (model[u].hi, u)):
        if last is None or model[v].lo > last:
            chosen.append(v)
            last = model[v].hi
    return chosen


def claw_number(G: Graph, model=None) -> tuple[int, ClawWitness | None]:
    """Largest k with an induced K_{1,k}; 0 for edgeless graphs.

    ``model`` may be an interval model of G (any sequence of objects with
    ``lo``/``hi``), in which case each neighbourhood MIS is found greedily.
    """
    best = 0
    witness = None
    for v in range(G.n):
        if len(G.adj[v]) <= best:
            continue
        if model is not None:
            leaves = _greedy_interval_mis(sorted(G.adj[v]), model)
        else:
            if len(G.adj[v]) > CLAW_NEIGHBORHOOD_CAP:
                raise InvariantError(
                    f"vertex {v} has {len(G.adj[v])} neighbours; exact claw search is "
                    f"capped at {CLAW_NEIGHBORHOOD_CAP} without an interval model"
                )
            leaves = list(iter_bits(max_independent_subset(G, G.masks[v])))
        if len(leaves) > best:
            best = len(leaves)
            witness = ClawWitness(v, tuple(sorted(leaves)))
    return best, witness


def has_claw(G: Graph) -> bool:
    """True iff G has an induced K_{1,3}."""
    for v in range(G.n):
        nb = G.masks[v]
        for a in iter_bits(nb):
            rest_a = nb & ~G.masks[a] & ~((1 << (a + 1)) - 1)
            for b in iter_bits(rest_a):
                if rest_a & ~G.masks[b] & ~((1 << (b + 1)) - 1):
                    return True
    return False


# ---------------------------------------------------------------------------
# Coloring
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> "Coloring":
        """Relabel colors 0..k-1 in order of first appearance."""
        relabel: dict[int, int] = {}
        out = []
        for c in colors:
            if c not in relabel:
                relabel[c] = len(relabel)
            out.append(relabel[c])
        return cls(tuple(out), len(relabel))

    def classes(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            groups[c].append(v)
        return groups

    def is_proper_for(self, G: Graph) -> bool:
        if len(self.colors) != G.n:
            return False
        if any(not 0 <= c < self.k for c in self.colors):
            return False
        if len(set(self.colors)) != self.k:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in G.edges)


def _dsatur(G: Graph) -> list[int]:
    color = [-1] * G.n
    seen: list[set[int]] = [set() for _ in range(G.n)]
    for _ in range(G.n):
        v = max(
            (u for u in range(G.n) if color[u] < 0),
            key=lambda u: (len(seen[u]), len(G.adj[u]), -u),
        )
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for w in G.adj[v]:
            seen[w].add(c)
    return color


def _exact_coloring(G: Graph) -> list[int]:
    best = _dsatur(G)
    best_k = max(best, default=-1) + 1
    color = [-1] * G.n

    def search(assigned: int, used: int) -> None:
        nonlocal best, best_k
        if used >= best_k:
            return
        if assigned == G.n:
            best, best_k = list(color), used
            return
        # most saturated uncoloured vertex next
        v = max(
            (u for u in range(G.n) if color[u] < 0),
            key=lambda u: (len({color[w] for w in G.adj[u] if color[w] >= 0}), len(G.adj[u])),
        )
        blocked = {color[w] for w in G.adj[v] if color[w] >= 0}
        for c in range(min(used + 1, best_k - 1)):
            if c in blocked:
                continue
            color[v] = c
            search(assigned + 1, max(used, c + 1))
            color[v] = -1

    if G.n:
        search(0, 0)
    return best


def color(G: Graph, mode: str = "heuristic", limit: int = EXACT_COLOR_LIMIT) -> Coloring:
    """Proper coloring: DSATUR greedy, or exact branch and bound for small n."""
    if mode == "heuristic":
        return Coloring.from_colors(_dsatur(G))
    if mode == "exact":
        if G.n > limit:
            raise InvariantError(
                f"exact coloring is limited to n <= {limit} (got n = {G.n}); use mode='heuristic'"
            )
        return Coloring.from_colors(_exact_coloring(G))
    raise ValueError(f"unknown coloring mode {mode!r}")


def best_coloring(G: Graph, limit: int = EXACT_COLOR_LIMIT) -> Coloring:
    """Exact when n <= limit, DSATUR otherwise."""
    return color(G, "exact" if G.n <= limit else "heuristic", limit)


# ---------------------------------------------------------------------------
# Interval and unit-interval recognition
# ---------------------------------------------------------------------------


def is_interval(G: Graph) -> bool:
    return bool(is_chordal(G)) and is_at_free(G)


def is_unit_interval(G: Graph) -> bool:
    return not has_claw(G) and is_interval(G)


def require_at_free(G: Graph) -> None:
    triple = find_asteroidal_triple(G)
    if triple is not None:
        raise NotATFreeError(triple)


class NotATFreeError(InvariantError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(f"graph is not AT-free: asteroidal triple {set(triple)}")


__all__ = [
    "ChordalCheck",
    "ClawWitness",
    "Coloring",
    "GraphError",
    "InvariantError",
    "NotATFreeError",
    "best_coloring",
    "chordless_cycle",
    "claw_number",
    "color",
    "diametral_dominating_pair",
    "find_asteroidal_triple",
    "has_claw",
    "is_at_free",
    "is_chordal",
    "is_dominating_pair",
    "is_interval",
    "is_perfect_elimination_ordering",
    "is_unit_interval",
    "max_independent_subset",
    "maximum_cardinality_search",
    "require_at_free",
]
