"""Cubicity bounds and exact brute-force oracles for small graphs.

The oracles decide ``param(G) <= k`` by giving every non-edge a witness
factor in which it must be absent. A factor j is feasible when some graph of
the right class (interval, unit interval, chordal) sits between G and the
complete graph minus the non-edges assigned to j. Feasibility is monotone in
the assigned set, so partial assignments are pruned as soon as one factor
becomes infeasible. Each sandwich test is an exact search over vertex
orderings:

* interval: an ordering where u < v < w and uw in E forces uv in E;
* unit interval: the same rule forcing both uv and vw;
* chordal: a perfect elimination ordering of the filled graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .boxrep import BoxRepresentation, box_upper, verify
from .graph import Graph, girth, iter_bits, to_graph6
from .invariants import (
    best_coloring,
    claw_number,
    has_claw,
    is_chordal,
    is_interval,
    is_unit_interval,
    require_at_free,
)
from .triangulate import interval_model, minimize_triangulation, split_supergraph

BOX_N_CAP = 8
CUB_N_CAP = 7
CHORD_N_CAP = 8
KMAX_CAP = 3

PARAMS = ("box", "cub", "chord")


class CapExceeded(ValueError):
    """The exact oracle refuses inputs beyond its hard caps."""


def log2_ceil(psi: int) -> int:
    """ceil(log2 psi), clamped to 0 for psi <= 1."""
    return (psi - 1).bit_length() if psi > 1 else 0


# ---------------------------------------------------------------------------
# Sandwich feasibility
# ---------------------------------------------------------------------------

Order = list[int]


def interval_sandwich(n: int, nbr: list[int], forbid: list[int]) -> Optional[Order]:
    """Ordering whose interval closure of G avoids every forbidden pair."""
    full = (1 << n) - 1
    parent: dict[int, tuple[int, int]] = {0: (-1, -1)}
    stack = [0]
    while stack:
        S = stack.pop()
        if S == full:
            order = []
            while S:
                prev, v = parent[S]
                order.append(v)
                S = prev
            return order[::-1]
        for v in range(n):
            if (S >> v) & 1:
                continue
            T = S | (1 << v)
            if T in parent:
                continue
            # a placed u forbidden with v must have all its neighbours placed
            if any(nbr[u] & ~S for u in iter_bits(forbid[v] & S)):
                continue
            parent[T] = (S, v)
            stack.append(T)
    return None


def interval_closure(n: int, nbr: list[int], order: Order) -> Graph:
    pos = {v: i for i, v in enumerate(order)}
    reach = {u: max([pos[u]] + [pos[w] for w in iter_bits(nbr[u])]) for u in range(n)}
    return Graph(n, [(u, v) for u in range(n) for v in range(n) if pos[u] < pos[v] <= reach[u]])


def unit_interval_sandwich(n: int, nbr: list[int], forbid: list[int]) -> Optional[Order]:
    """Ordering whose proper-interval closure of G avoids every forbidden pair."""
    full = (1 << n) - 1
    dead: set[tuple[int, tuple[int, ...]]] = set()
    order: list[int] = []

    def closed_prefix(S: int) -> int:
        prefix = 0
        for a in order:
            if nbr[a] & ~S:
                break
            prefix |= 1 << a
        return prefix

    def search(S: int) -> bool:
        if S == full:
            return True
        prefix = closed_prefix(S)
        key = (S, tuple(a for a in order if not (prefix >> a) & 1))
        if key in dead:
            return False
        for v in range(n):
            if (S >> v) & 1:
                continue
            # every forbidden partner already placed must lie in the closed prefix
            if forbid[v] & S & ~prefix:
                continue
            order.append(v)
            if search(S | (1 << v)):
                return True
            order.pop()
        dead.add(key)
        return False

    return list(order) if search(0) else None


def unit_interval_closure(n: int, nbr: list[int], order: Order) -> Graph:
    pos = {v: i for i, v in enumerate(order)}
    reach = [0] * n
    running = -1
    for i, u in enumerate(order):
        running = max(running, i, max((pos[w] for w in iter_bits(nbr[u])), default=i))
        reach[i] = running
    return Graph(
        n,
        [(order[a], order[b]) for a in range(n) for b in range(a + 1, n) if b <= reach[a]],
    )


def _elimination_reach(nbr: list[int], S: int, v: int) -> int:
    """Vertices outside S joined to v by a path whose interior lies in S."""
    inside = nbr[v] & S
    frontier = inside
    while frontier:
        grow = 0
        for w in iter_bits(frontier):
            grow |= nbr[w]
        grow &= S & ~inside & ~(1 << v)
        inside |= grow
        frontier = grow
    out = nbr[v]
    for w in iter_bits(inside):
        out |= nbr[w]
    return out & ~S & ~(1 << v)


def chordal_sandwich(n: int, nbr: list[int], forbid: list[int]) -> Optional[Order]:
    """Elimination ordering whose fill never creates a forbidden pair."""
    full = (1 << n) - 1
    parent: dict[int, tuple[int, int]] = {0: (-1, -1)}
    stack = [0]
    while stack:
        S = stack.pop()
        if S == full:
            order = []
            while S:
                prev, v = parent[S]
                order.append(v)
                S = prev
            return order[::-1]
        for v in range(n):
            if (S >> v) & 1:
                continue
            T = S | (1 << v)
            if T in parent:
                continue
            clique = _elimination_reach(nbr, S, v) | (1 << v)
            if any(forbid[w] & clique for w in iter_bits(clique)):
                continue
            parent[T] = (S, v)
            stack.append(T)
    return None


def chordal_closure(n: int, nbr: list[int], order: Order) -> Graph:
    edges = []
    S = 0
    for v in order:
        edges += [(v, w) for w in iter_bits(_elimination_reach(nbr, S, v))]
        S |= 1 << v
    return Graph(n, edges)


@dataclass(frozen=True)
class _FactorKind:
    name: str
    sandwich: Callable[[int, list[int], list[int]], Optional[Order]]
    closure: Callable[[int, list[int], Order], Graph]
    recognizes: Callable[[Graph], bool]
    n_cap: int


KINDS = {
    "box": _FactorKind("interval", interval_sandwich, interval_closure, is_interval, BOX_N_CAP),
    "cub": _FactorKind("unit interval", unit_interval_sandwich, unit_interval_closure, is_unit_interval, CUB_N_CAP),
    "chord": _FactorKind("chordal", chordal_sandwich, chordal_closure, lambda H: bool(is_chordal(H)), CHORD_N_CAP),
}


# ---------------------------------------------------------------------------
# Exact oracles
# ---------------------------------------------------------------------------


@dataclass
class ExactResult:
    """``value`` is None when the parameter exceeds ``kmax``."""

    param: str
    value: Optional[int]
    kmax: int
    factors: list[Graph] = field(default_factory=list)
    representation: Optional[BoxRepresentation] = None

    @property
    def exceeds(self) -> bool:
        return self.value is None

    def at_most(self, k: int) -> Optional[bool]:
        """Whether value <= k; None when undecided (value beyond kmax, k >= kmax)."""
        if self.value is not None:
            return self.value <= k
        return False if k <= self.kmax else None


def _search(G: Graph, k: int, kind: _FactorKind) -> Optional[list[Graph]]:
    n = G.n
    nbr = list(G.masks)
    missing = list(G.non_edges())
    if k == 0:
        return [] if not missing else None
    forbid = [[0] * n for _ in range(k)]
    cache: dict[tuple[int, ...], Optional[Order]] = {}

    def feasible(d: int) -> Optional[Order]:
        key = tuple(forbid[d])
        if key not in cache:
            cache[key] = kind.sandwich(n, nbr, forbid[d])
        return cache[key]

    def assign(idx: int, used: int) -> bool:
        if idx == len(missing):
            return True
        u, v = missing[idx]
        for d in range(min(used + 1, k)):
            forbid[d][u] |= 1 << v
            forbid[d][v] |= 1 << u
            if feasible(d) is not None and assign(idx + 1, max(used, d + 1)):
                return True
            forbid[d][u] &= ~(1 << v)
            forbid[d][v] &= ~(1 << u)
        return False

    if not assign(0, 0):
        return None
    factors = []
    for d in range(k):
        order = feasible(d)
        assert order is not None
        factors.append(kind.closure(n, nbr, order))
    return factors


def exact_parameter(G: Graph, param: str, kmax: int = KMAX_CAP) -> ExactResult:
    """Exact box / cub / chord up to ``kmax`` with certified witness factors."""
    if param not in KINDS:
        raise ValueError(f"unknown parameter {param!r}; expected one of {PARAMS}")
    kind = KINDS[param]
    if G.n > kind.n_cap:
        raise CapExceeded(
            f"exact {param} is capped at n <= {kind.n_cap} (got n = {G.n}); "
            "use the 'bounds' command for larger graphs"
        )
    if not 0 <= kmax <= KMAX_CAP:
        raise CapExceeded(f"kmax must lie in 0..{KMAX_CAP}, got {kmax}")
    for k in range(kmax + 1):
        factors = _search(G, k, kind)
        if factors is None:
            continue
        _certify(G, factors, kind)
        rep = None
        if param in ("box", "cub"):
            rep = BoxRepresentation(G.n, tuple(interval_model(F) for F in factors), f"exact-{param}")
            problems = verify(G, rep)
            if problems:
                raise AssertionError(f"exact {param} witness fails verification: {problems[0]}")
        return ExactResult(param, k, kmax, factors, rep)
    return ExactResult(param, None, kmax)


def _certify(G: Graph, factors: list[Graph], kind: _FactorKind) -> None:
    common = set(G.edges) | set(G.non_edges())
    for F in factors:
        if not G.is_subgraph_of(F) or not kind.recognizes(F):
            raise AssertionError(f"oracle factor is not a {kind.name} supergraph of G")
        common &= F.edges
    if common != set(G.edges):
        raise AssertionError("oracle factors do not intersect to G")


def exact_boxicity(G: Graph, kmax: int = KMAX_CAP) -> ExactResult:
    return exact_parameter(G, "box", kmax)


def exact_cubicity(G: Graph, kmax: int = KMAX_CAP) -> ExactResult:
    return exact_parameter(G, "cub", kmax)


def exact_chordality(G: Graph, kmax: int = KMAX_CAP) -> ExactResult:
    return exact_parameter(G, "chord", kmax)


# ---------------------------------------------------------------------------
# Bound report
# ---------------------------------------------------------------------------

FORMULA_BOX_LOG = "box_log_psi"  # box(G) * (ceil(log2 psi) + 2)
FORMULA_GIRTH5_LOG = "girth5_log_psi"  # 2 * ceil(log2 psi) + 4
FORMULA_CHI_CLAWFREE = "chi_clawfree"  # chi(G), claw-free AT-free graphs only
FORMULA_PRIORITY = (FORMULA_GIRTH5_LOG, FORMULA_CHI_CLAWFREE, FORMULA_BOX_LOG)


@dataclass
class BoundReport:
    graph6: str
    psi: int
    box_upper: int
    box_method: str
    colors: int
    girth: Optional[int]
    claw_free: bool
    formulas: dict[str, int]
    selected: str
    exact: dict[str, Optional[int]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def cub_upper(self) -> int:
        return self.formulas[self.selected]

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "psi": self.psi,
            "log2_psi_ceil": log2_ceil(self.psi),
            "box_upper": self.box_upper,
            "box_method": self.box_method,
            "colors": self.colors,
            "girth": self.girth,
            "claw_free": self.claw_free,
            "formulas": dict(self.formulas),
            "selected": self.selected,
            "cub_upper": self.cub_upper,
            "exact": dict(self.exact),
            "notes": list(self.notes),
        }


def cub_upper(G: Graph, with_exact: bool = False) -> BoundReport:
    """Every applicable cubicity bound for an AT-free graph; the smallest is selected."""
    require_at_free(G)
    psi, _ = claw_number(G)
    bound = box_upper(G)
    coloring = best_coloring(G)
    g = girth(G)
    claw_free = not has_claw(G)
    L = log2_ceil(psi)
    formulas = {FORMULA_BOX_LOG: bound.k * (L + 2)}
    if g is None or g >= 5:
        formulas[FORMULA_GIRTH5_LOG] = 2 * L + 4
    if claw_free:
        formulas[FORMULA_CHI_CLAWFREE] = coloring.k
    selected = min(formulas, key=lambda tag: (formulas[tag], FORMULA_PRIORITY.index(tag)))
    report = BoundReport(
        to_graph6(G), psi, bound.k, bound.method, coloring.k, g, claw_free, formulas, selected
    )
    if with_exact:
        for param in PARAMS:
            kind = KINDS[param]
            if G.n <= kind.n_cap:
                report.exact[param] = exact_parameter(G, param).value
                report.notes.append(f"exact {param}: exhaustive search, kmax={KMAX_CAP} (None = exceeds)")
            else:
                report.notes.append(f"exact {param} skipped: n > {kind.n_cap}")
    return report


def triangulation_claw_probe(G: Graph) -> tuple[int, int, Graph]:
    """Claw numbers of G and of a minimal triangulation H' of G."""
    require_at_free(G)
    psi_g, _ = claw_number(G)
    if G.n == 0:
        return psi_g, psi_g, G
    H = split_supergraph(G, best_coloring(G), 0)
    H_min = minimize_triangulation(G, H).graph
    psi_h, _ = claw_number(H_min)
    return psi_g, psi_h, H_min
