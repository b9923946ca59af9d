"""Closed intervals with exact rational endpoints and interval models."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .graph import Graph

Number = Union[int, Fraction]


@dataclass(frozen=True)
class IntervalQ:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval [{self.lo}, {self.hi}] has lo > hi")

    def intersects(self, other: "IntervalQ") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def shifted(self, offset: Number) -> "IntervalQ":
        return IntervalQ(self.lo + offset, self.hi + offset)

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class IntervalModel:
    """One interval per vertex; a single box dimension."""

    intervals: tuple[IntervalQ, ...]

    @classmethod
    def of(cls, pairs: Iterable[tuple[Number, Number]]) -> "IntervalModel":
        return cls(tuple(IntervalQ(lo, hi) for lo, hi in pairs))

    def __len__(self) -> int:
        return len(self.intervals)

    def __getitem__(self, v: int) -> IntervalQ:
        return self.intervals[v]

    def __iter__(self) -> Iterator[IntervalQ]:
        return iter(self.intervals)

    def with_interval(self, v: int, interval: IntervalQ) -> "IntervalModel":
        items = list(self.intervals)
        items[v] = interval
        return IntervalModel(tuple(items))

    def intersection_graph(self) -> Graph:
        n = len(self.intervals)
        iv = self.intervals
        return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if iv[u].intersects(iv[v])])
