"""Box representations: the exact verifier and two constructions.

``girth5_boxrep`` builds a two-dimensional representation of an AT-free
graph of girth >= 5 from its dominating-path decomposition.
``chromatic_boxrep`` turns any proper k-coloring of an AT-free graph into a
k-dimensional representation, one minimal triangulation per colour class.
All endpoints are ``Fraction``s; nothing here touches floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .decompose import DecompositionError, decompose
from .graph import Graph, connected_components, from_graph6, girth, to_graph6
from .intervals import IntervalModel, IntervalQ
from .invariants import (
    Coloring,
    InvariantError,
    best_coloring,
    find_asteroidal_triple,
    is_interval,
)
from .triangulate import interval_model, minimize_triangulation, split_supergraph

HALF = Fraction(1, 2)


class BoxRepError(ValueError):
    pass


class PreconditionError(BoxRepError):
    """Input outside the constructions' domain (e.g. not AT-free)."""


class InternalVerifyError(BoxRepError):
    """A construction produced a representation the verifier rejects."""


class RepresentationFormatError(BoxRepError):
    pass


@dataclass(frozen=True)
class BoxRepresentation:
    n: int
    dims: tuple[IntervalModel, ...]
    method: str = ""

    def __post_init__(self) -> None:
        for d, model in enumerate(self.dims):
            if len(model) != self.n:
                raise BoxRepError(f"dimension {d} has {len(model)} intervals, expected {self.n}")

    @property
    def dimension(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class PairViolation:
    pair: tuple[int, int]
    pattern: tuple[bool, ...]
    kind: str  # "missing_edge" or "unkilled_non_edge"

    def __str__(self) -> str:
        dims = "".join("1" if hit else "0" for hit in self.pattern) or "-"
        return f"{self.kind} at {self.pair} (per-dimension overlap {dims})"


def verify(G: Graph, R: BoxRepresentation) -> list[PairViolation]:
    """Empty list iff (u,v) is an edge exactly when u,v overlap in every dimension."""
    if R.n != G.n:
        raise BoxRepError(f"representation covers {R.n} vertices, graph has {G.n}")
    out = []
    for u in range(G.n):
        for v in range(u + 1, G.n):
            pattern = tuple(model[u].intersects(model[v]) for model in R.dims)
            edge = G.has_edge(u, v)
            if edge and not all(pattern):
                out.append(PairViolation((u, v), pattern, "missing_edge"))
            elif not edge and all(pattern):
                out.append(PairViolation((u, v), pattern, "unkilled_non_edge"))
    return out


# ---------------------------------------------------------------------------
# Girth >= 5
# ---------------------------------------------------------------------------


def _component_intervals(sub: Graph, n: int) -> tuple[list[IntervalQ], list[IntervalQ]]:
    D = decompose(sub)
    dim1: list[IntervalQ | None] = [None] * sub.n
    dim2: list[IntervalQ | None] = [None] * sub.n
    for i, u in enumerate(D.path, start=1):
        dim1[u] = IntervalQ(i, i + 1)
        dim2[u] = IntervalQ(1, 2) if i % 2 else IntervalQ(2, 3)
    for i, members in D.classes.items():
        pendants = [v for v in members if v not in D.nonpendant]
        for j, v in enumerate(pendants, start=1):
            dim1[v] = IntervalQ(i + Fraction(2 * j - 1, 2 * n), i + Fraction(2 * j, 2 * n))
            dim2[v] = IntervalQ(Fraction(5, 4), Fraction(7, 4)) if i % 2 else IntervalQ(Fraction(9, 4), Fraction(11, 4))
        for v in members:
            if v not in D.nonpendant:
                continue
            left, right = D.side_flags[v]
            if left and right:
                dim1[v] = IntervalQ(i - HALF, i + 3 * HALF)
            elif right:
                dim1[v] = IntervalQ(i + 1, i + 3 * HALF)
            elif left:
                dim1[v] = IntervalQ(i - HALF, i)
            else:
                raise DecompositionError(f"non-pendant vertex {v} has no side neighbour")
            dim2[v] = IntervalQ(0, 1) if i % 2 else IntervalQ(3, 4)
    assert all(iv is not None for iv in dim1) and all(iv is not None for iv in dim2)
    return dim1, dim2  # type: ignore[return-value]


def girth5_boxrep(G: Graph) -> BoxRepresentation:
    """Two-dimensional representation of an AT-free graph with girth >= 5."""
    triple = find_asteroidal_triple(G)
    if triple is not None:
        raise PreconditionError(f"graph is not AT-free: asteroidal triple {set(triple)}")
    g = girth(G)
    if g is not None and g < 5:
        raise PreconditionError(f"girth5 construction needs girth >= 5, got {g}")
    n = G.n
    dim1: list[IntervalQ] = [IntervalQ(0, 0)] * n
    dim2: list[IntervalQ] = [IntervalQ(0, 0)] * n
    for index, comp in enumerate(connected_components(G)):
        sub, labels = G.induced(comp)
        first, second = _component_intervals(sub, n)
        offset = index * (n + 4)
        for local, v in enumerate(labels):
            dim1[v] = first[local].shifted(offset)
            dim2[v] = second[local]
    R = BoxRepresentation(n, (IntervalModel(tuple(dim1)), IntervalModel(tuple(dim2))), "girth5")
    _check_or_raise(G, R)
    return R


# ---------------------------------------------------------------------------
# Chromatic pipeline
# ---------------------------------------------------------------------------


def chromatic_dimension(G: Graph, coloring: Coloring, i: int) -> IntervalModel:
    H = split_supergraph(G, coloring, i)
    H_min = minimize_triangulation(G, H).graph
    if not is_interval(H_min):
        raise PreconditionError(
            f"minimal triangulation for colour class {i} is not an interval graph; "
            "minimal triangulations of AT-free graphs are always interval, so G is not AT-free"
        )
    return interval_model(H_min)


def chromatic_boxrep(G: Graph, coloring: Coloring | None = None) -> BoxRepresentation:
    """One interval dimension per colour class of a proper coloring."""
    triple = find_asteroidal_triple(G)
    if triple is not None:
        raise PreconditionError(f"graph is not AT-free: asteroidal triple {set(triple)}")
    if coloring is None:
        coloring = best_coloring(G)
    if not coloring.is_proper_for(G):
        raise InvariantError("coloring is not a proper coloring of G")
    dims = tuple(chromatic_dimension(G, coloring, i) for i in range(coloring.k))
    R = BoxRepresentation(G.n, dims, "coloring")
    _check_or_raise(G, R)
    return R


def _check_or_raise(G: Graph, R: BoxRepresentation) -> None:
    problems = verify(G, R)
    if problems:
        raise InternalVerifyError(
            f"{R.method} representation failed verification: {problems[0]}"
            + (f" and {len(problems) - 1} more" if len(problems) > 1 else "")
        )


# ---------------------------------------------------------------------------
# Upper bound with witness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoxBound:
    k: int
    method: str  # complete | interval | girth5 | coloring
    representation: BoxRepresentation


def box_upper(G: Graph, coloring: Coloring | None = None) -> BoxBound:
    """Smallest constructive upper bound on box(G) for AT-free G, with witness."""
    triple = find_asteroidal_triple(G)
    if triple is not None:
        raise PreconditionError(f"graph is not AT-free: asteroidal triple {set(triple)}")
    if G.is_complete():
        return BoxBound(0, "complete", BoxRepresentation(G.n, (), "complete"))
    if is_interval(G):
        R = BoxRepresentation(G.n, (interval_model(G),), "interval")
        _check_or_raise(G, R)
        return BoxBound(1, "interval", R)
    g = girth(G)
    if g is None or g >= 5:
        R = girth5_boxrep(G)
        return BoxBound(2, "girth5", R)
    R = chromatic_boxrep(G, coloring)
    return BoxBound(R.dimension, "coloring", R)


# ---------------------------------------------------------------------------
# JSON representation file
# ---------------------------------------------------------------------------


def representation_to_dict(R: BoxRepresentation, G: Graph) -> dict[str, Any]:
    return {
        "n": R.n,
        "dims": R.dimension,
        "intervals": [
            [[[iv.lo.numerator, iv.lo.denominator], [iv.hi.numerator, iv.hi.denominator]] for iv in model]
            for model in R.dims
        ],
        "method": R.method,
        "graph6": to_graph6(G),
    }


def dumps_representation(R: BoxRepresentation, G: Graph) -> str:
    return json.dumps(representation_to_dict(R, G), indent=1)


def _rational(value: Any, where: str) -> Fraction:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in value)
        or value[1] <= 0
    ):
        raise RepresentationFormatError(f"{where}: expected [num, den] with den > 0, got {value!r}")
    q = Fraction(value[0], value[1])
    if (q.numerator, q.denominator) != (value[0], value[1]):
        raise RepresentationFormatError(f"{where}: rational {value!r} is not in lowest terms")
    return q


def representation_from_dict(data: Any) -> tuple[BoxRepresentation, Graph | None]:
    if not isinstance(data, dict):
        raise RepresentationFormatError("representation must be a JSON object")
    for key in ("n", "dims", "intervals"):
        if key not in data:
            raise RepresentationFormatError(f"missing key {key!r}")
    n, dims, raw = data["n"], data["dims"], data["intervals"]
    if not isinstance(n, int) or n < 0 or not isinstance(dims, int) or dims < 0:
        raise RepresentationFormatError("'n' and 'dims' must be non-negative integers")
    if not isinstance(raw, list) or len(raw) != dims:
        raise RepresentationFormatError(f"'intervals' must list {dims} dimensions")
    models = []
    for d, per_dim in enumerate(raw):
        if not isinstance(per_dim, list) or len(per_dim) != n:
            raise RepresentationFormatError(f"dimension {d} must list {n} intervals")
        ivs = []
        for v, pair in enumerate(per_dim):
            if not isinstance(pair, list) or len(pair) != 2:
                raise RepresentationFormatError(f"dimension {d}, vertex {v}: expected [lo, hi]")
            lo = _rational(pair[0], f"dimension {d}, vertex {v}, lo")
            hi = _rational(pair[1], f"dimension {d}, vertex {v}, hi")
            if lo > hi:
                raise RepresentationFormatError(f"dimension {d}, vertex {v}: lo > hi")
            ivs.append(IntervalQ(lo, hi))
        models.append(IntervalModel(tuple(ivs)))
    graph = None
    if data.get("graph6"):
        try:
            graph = from_graph6(data["graph6"])
        except ValueError as exc:
            raise RepresentationFormatError(f"bad graph6 field: {exc}") from None
    method = data.get("method", "")
    return BoxRepresentation(n, tuple(models), str(method)), graph


def loads_representation(text: str) -> tuple[BoxRepresentation, Graph | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RepresentationFormatError(f"invalid JSON: {exc}") from None
    return representation_from_dict(data)


def models_from_graphs(factors: Sequence[Graph]) -> tuple[IntervalModel, ...]:
    """Interval models for a list of interval graphs."""
    return tuple(interval_model(F) for F in factors)
