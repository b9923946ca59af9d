"""Minimal triangulations, split supergraphs and interval models.

The chromatic pipeline colours G, completes everything outside one colour
class into a clique (a split, hence chordal, supergraph), then strips fill
edges until the result is a minimal triangulation. For AT-free G that
minimal triangulation is an interval graph, whose clique path yields one
dimension of a box representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits
from .intervals import IntervalModel
from .invariants import Coloring, InvariantError, is_chordal, is_interval


class TriangulationError(ValueError):
    pass


class NotIntervalError(TriangulationError):
    pass


@dataclass(frozen=True)
class FillSet:
    base: Graph
    fill: frozenset[tuple[int, int]]

    @property
    def graph(self) -> Graph:
        return self.base.add_edges(self.fill)


@dataclass(frozen=True)
class CliquePath:
    cliques: tuple[tuple[int, ...], ...]


def split_supergraph(G: Graph, coloring: Coloring, i: int) -> Graph:
    """Keep class ``i`` independent (with its G-edges); make the rest a clique."""
    if not coloring.is_proper_for(G):
        raise InvariantError("split_supergraph needs a proper coloring of G")
    if not 0 <= i < coloring.k:
        raise InvariantError(f"color index {i} outside 0..{coloring.k - 1}")
    outside = [v for v in range(G.n) if coloring.colors[v] != i]
    clique = [(u, v) for a, u in enumerate(outside) for v in outside[a + 1 :]]
    return G.add_edges(clique)


def _common_neighbors_form_clique(masks: list[int], u: int, v: int) -> bool:
    common = masks[u] & masks[v]
    for w in iter_bits(common):
        if common & ~masks[w] & ~(1 << w):
            return False
    return True


def minimize_triangulation(G: Graph, H: Graph) -> FillSet:
    """Remove fill edges of ``H`` (lexicographically, to a fixpoint) while chordal.

    In a chordal graph an edge can be dropped without losing chordality
    exactly when the common neighbourhood of its ends is a clique, so each
    probe is local. The fixpoint has no removable fill edge, which makes it
    a minimal triangulation of G.
    """
    if not G.is_subgraph_of(H):
        raise TriangulationError("H is not a supergraph of G on the same vertex set")
    if not is_chordal(H):
        raise TriangulationError("H is not chordal")
    masks = list(H.masks)
    fill = set(H.edges - G.edges)
    changed = True
    while changed:
        changed = False
        for u, v in sorted(fill):
            if _common_neighbors_form_clique(masks, u, v):
                masks[u] &= ~(1 << v)
                masks[v] &= ~(1 << u)
                fill.discard((u, v))
                changed = True
    return FillSet(G, frozenset(fill))


@dataclass(frozen=True)
class FillEdgeCertificate:
    edge: tuple[int, int]
    unique_chord: bool
    removable: bool


def minimality_report(G: Graph, H: Graph) -> list[FillEdgeCertificate]:
    """Per fill edge: the unique-chord test and a full MCS removal probe."""
    if not G.is_subgraph_of(H):
        raise TriangulationError("H is not a supergraph of G on the same vertex set")
    report = []
    for u, v in sorted(H.edges - G.edges):
        unique_chord = not _common_neighbors_form_clique(list(H.masks), u, v)
        removable = bool(is_chordal(H.remove_edges([(u, v)])))
        report.append(FillEdgeCertificate((u, v), unique_chord, removable))
    return report


def is_minimal_triangulation(G: Graph, H: Graph) -> bool:
    if not G.is_subgraph_of(H):
        raise TriangulationError("H is not a supergraph of G on the same vertex set")
    if not is_chordal(H):
        return False
    report = minimality_report(G, H)
    for cert in report:
        if cert.unique_chord == cert.removable:
            raise AssertionError(f"minimality tests disagree on fill edge {cert.edge}")
    return all(cert.unique_chord for cert in report)


def maximal_cliques_chordal(H: Graph) -> list[tuple[int, ...]]:
    check = is_chordal(H)
    if not check:
        raise TriangulationError(f"graph is not chordal (chordless cycle {check.witness})")
    peo = check.witness
    pos = {v: i for i, v in enumerate(peo)}
    candidates = set()
    for v in peo:
        mask = 1 << v
        for w in H.adj[v]:
            if pos[w] > pos[v]:
                mask |= 1 << w
        candidates.add(mask)
    maximal = [c for c in candidates if not any(c != d and c & d == c for d in candidates)]
    return sorted(tuple(iter_bits(c)) for c in maximal)


def clique_path_order(H: Graph) -> CliquePath:
    """Order the maximal cliques so every vertex occupies a consecutive run."""
    if not is_interval(H):
        raise NotIntervalError("graph is not an interval graph")
    cliques = maximal_cliques_chordal(H)
    masks = [sum(1 << v for v in c) for c in cliques]
    total = len(cliques)
    dead: set[tuple[int, int]] = set()
    order: list[int] = []

    def extend(used: int, seen: int, last: int) -> bool:
        if len(order) == total:
            return True
        if (used, last) in dead:
            return False
        for k in range(total):
            if (used >> k) & 1:
                continue
            K = masks[k]
            if last >= 0 and K & seen & ~masks[last]:
                continue
            later = 0
            for r in range(total):
                if r != k and not (used >> r) & 1:
                    later |= masks[r]
            if seen & later & ~K:
                continue
            order.append(k)
            if extend(used | (1 << k), seen | K, k):
                return True
            order.pop()
        dead.add((used, last))
        return False

    if not extend(0, 0, -1):
        raise NotIntervalError("no consecutive clique arrangement exists (not interval)")
    return CliquePath(tuple(cliques[k] for k in order))


def interval_model(H: Graph) -> IntervalModel:
    """v -> [first clique position, last clique position], 1-based."""
    path = clique_path_order(H)
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, clique in enumerate(path.cliques, start=1):
        for v in clique:
            first.setdefault(v, pos)
            last[v] = pos
    return IntervalModel.of((first[v], last[v]) for v in range(H.n))
