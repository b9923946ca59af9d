"""Dominating-path decomposition of connected AT-free graphs of girth >= 5.

A shortest path P between a diametral dominating pair dominates G. When G
has girth at least five every off-path vertex sees exactly one path vertex
u_i, which sorts the off-path vertices into classes S_i. Off-path edges only
join S_i to S_{i+2}, and at most one such edge exists per pair of classes.
``validate`` re-checks each of those facts on concrete input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, girth, is_connected
from .invariants import diametral_dominating_pair, find_asteroidal_triple

RULE_PATH = "shortest path: consecutive vertices adjacent, no chords"
RULE_SINGLE = "|N_G(v) ∩ V(P)| = 1"
RULE_PART1 = "part (1): |N_G(v) ∩ S_i| = 0"
RULE_PART2 = "part (2): |N_G(v) ∩ S_{i+1}| = 0"
RULE_PART3 = "part (3): |N_G(v) ∩ S_{i+2}| <= 1"
RULE_PART4 = "part (4): |N_G(v) ∩ S_j| = 0 for j >= i+3"
RULE_SPECIAL = "one edge per class pair: (p,q) ∉ E(G) when (u,v) ∈ E(G)"
RULE_TWO_NONPENDANT = "at most 2 non-pendant vertices per class"
RULE_SIDES = "two non-pendant vertices in S_i face opposite sides"
RULE_SIDE_FLAG = "non-pendant vertex has a neighbour in S_{i-2} or S_{i+2}"


class DecompositionError(ValueError):
    def __init__(self, message: str, violations: list["Violation"] | None = None):
        self.violations = violations or []
        if self.violations:
            message += ": " + "; ".join(str(v) for v in self.violations)
        super().__init__(message)


@dataclass(frozen=True)
class Violation:
    rule: str
    vertices: tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.rule} violated at {list(self.vertices)}{extra}"


@dataclass(frozen=True)
class DominatingPathDecomposition:
    """Path u_1..u_t (stored 0-based, indexed 1-based) and classes S_1..S_t."""

    path: tuple[int, ...]
    classes: dict[int, tuple[int, ...]]
    nonpendant: frozenset[int]
    side_flags: dict[int, tuple[bool, bool]] = field(default_factory=dict)

    @property
    def t(self) -> int:
        return len(self.path)

    def class_of(self) -> dict[int, int]:
        return {v: i for i, members in self.classes.items() for v in members}

    def index_of(self, u: int) -> int:
        return self.path.index(u) + 1


def _build(G: Graph, path: list[int]) -> DominatingPathDecomposition:
    index = {u: i for i, u in enumerate(path, start=1)}
    classes: dict[int, list[int]] = {i: [] for i in range(1, len(path) + 1)}
    off_path = [v for v in range(G.n) if v not in index]
    for v in off_path:
        hits = sorted(index[u] for u in G.adj[v] if u in index)
        classes.setdefault(hits[0] if hits else 0, []).append(v)
    class_of = {v: i for i, members in classes.items() for v in members}
    nonpendant = frozenset(v for v in off_path if any(w in class_of for w in G.adj[v]))
    flags = {}
    for v in nonpendant:
        i = class_of[v]
        sides = [class_of[w] for w in G.adj[v] if w in class_of]
        flags[v] = (i - 2 in sides, i + 2 in sides)
    return DominatingPathDecomposition(
        tuple(path),
        {i: tuple(sorted(members)) for i, members in classes.items()},
        nonpendant,
        flags,
    )


def decompose(G: Graph) -> DominatingPathDecomposition:
    """Decompose a connected AT-free graph with girth >= 5 (or a tree)."""
    if G.n == 0 or not is_connected(G):
        raise DecompositionError("decompose needs a non-empty connected graph")
    triple = find_asteroidal_triple(G)
    if triple is not None:
        raise DecompositionError(f"graph is not AT-free: asteroidal triple {set(triple)}")
    g = girth(G)
    if g is not None and g < 5:
        raise DecompositionError(f"graph has girth {g} < 5")
    _, _, path = diametral_dominating_pair(G)
    D = _build(G, path)
    problems = validate(D, G)
    for v in sorted(D.nonpendant):
        if not any(D.side_flags[v]):
            problems.append(Violation(RULE_SIDE_FLAG, (v,)))
    if problems:
        raise DecompositionError("path structure check failed", problems)
    return D


def validate(D: DominatingPathDecomposition, G: Graph) -> list[Violation]:
    """Every clause of the dominating-path structure, checked against G."""
    out: list[Violation] = []
    path = D.path
    t = len(path)
    on_path = set(path)

    for a in range(t):
        for b in range(a + 1, t):
            adjacent = G.has_edge(path[a], path[b])
            if adjacent != (b == a + 1):
                out.append(Violation(RULE_PATH, (path[a], path[b])))

    class_of = D.class_of()
    members = {i: set(vs) for i, vs in D.classes.items()}
    for v in range(G.n):
        if v in on_path:
            continue
        i = class_of.get(v)
        hits = [u for u in G.adj[v] if u in on_path]
        if i is None or len(hits) != 1 or not 1 <= i <= t or hits[0] != path[i - 1]:
            out.append(Violation(RULE_SINGLE, (v, *sorted(hits))))

    def nbrs_in(v: int, j: int) -> list[int]:
        return sorted(w for w in G.adj[v] if w in members.get(j, ()))

    for i in range(1, t + 1):
        for v in D.classes.get(i, ()):
            same = nbrs_in(v, i)
            if same:
                out.append(Violation(RULE_PART1, (v, *same)))
            nxt = nbrs_in(v, i + 1)
            if nxt:
                out.append(Violation(RULE_PART2, (v, *nxt)))
            for j in (i + 2, i - 2):
                side = nbrs_in(v, j)
                if len(side) > 1:
                    out.append(Violation(RULE_PART3, (v, *side), f"class S_{j}"))
            far = sorted(w for j in range(i + 3, t + 1) for w in nbrs_in(v, j))
            if far:
                out.append(Violation(RULE_PART4, (v, *far)))

    for i in range(1, t - 1):
        cross = sorted(
            (u, w) for u in D.classes.get(i, ()) for w in nbrs_in(u, i + 2)
        )
        for a in range(len(cross)):
            for b in range(a + 1, len(cross)):
                (u, v), (p, q) = cross[a], cross[b]
                if p != u and q != v:
                    out.append(Violation(RULE_SPECIAL, (u, v, p, q), f"classes S_{i}, S_{i + 2}"))

    for i in range(1, t + 1):
        nonpendant = [
            v for v in D.classes.get(i, ()) if any(w in class_of for w in G.adj[v])
        ]
        if len(nonpendant) > 2:
            out.append(Violation(RULE_TWO_NONPENDANT, tuple(nonpendant), f"class S_{i}"))
        elif len(nonpendant) == 2:
            u, v = nonpendant
            ok = (not nbrs_in(u, i - 2) and not nbrs_in(v, i + 2)) or (
                not nbrs_in(u, i + 2) and not nbrs_in(v, i - 2)
            )
            if not ok:
                out.append(Violation(RULE_SIDES, (u, v), f"class S_{i}"))
    return out
