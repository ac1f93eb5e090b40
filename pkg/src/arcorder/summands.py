"""Indecomposable embeddings with subspace exponent at most 2.

P0(m), P1(m), P2(m) are pickets: the invariant subspace of dimension 0, 1 or
2 inside one Jordan block of size m.  B2(m, r) with r <= m - 2 is the
bipicket, a 2-dimensional subspace spread over blocks of sizes m and r.
The symbol B2(m, m - 1) is only an alias for P2(m) + P0(m - 1).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .partitions import Partition

# vertex index standing for "beyond every vertex"; an arc (INF, r) is a pole
INF = 10**9

_KIND_ORDER = {"B2": 0, "P2": 1, "P1": 2, "P0": 3}


@dataclass(frozen=True)
class Indecomposable:
    kind: str
    m: int
    r: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.m < 1:
            raise ValueError(f"{self.kind} needs m >= 1")
        if self.kind == "P2" and self.m < 2:
            raise ValueError("P2(m) needs m >= 2")
        if self.kind == "B2" and not 1 <= self.r <= self.m - 2:
            raise ValueError(f"B2({self.m},{self.r}) needs 1 <= r <= m-2")
        if self.kind != "B2" and self.r:
            raise ValueError(f"{self.kind} takes a single parameter")

    @property
    def ambient(self) -> tuple:
        return (self.m, self.r) if self.kind == "B2" else (self.m,)

    @property
    def subspace_dim(self) -> int:
        return {"P0": 0, "P1": 1, "P2": 2, "B2": 2}[self.kind]

    @property
    def subspace_type(self) -> tuple:
        return {"P0": (), "P1": (1,), "P2": (2,), "B2": (2,)}[self.kind]

    def sort_key(self):
        return (_KIND_ORDER[self.kind], -self.m, -self.r)

    def __str__(self) -> str:
        if self.kind == "B2":
            return f"B2({self.m},{self.r})"
        return f"{self.kind}({self.m})"

    def to_json(self) -> dict:
        d = {"kind": self.kind, "m": self.m}
        if self.kind == "B2":
            d["r"] = self.r
        return d

    @staticmethod
    def from_json(d: dict) -> "Indecomposable":
        return Indecomposable(d["kind"], int(d["m"]), int(d.get("r", 0)))


def P0(m: int) -> Indecomposable:
    return Indecomposable("P0", m)


def P1(m: int) -> Indecomposable:
    return Indecomposable("P1", m)


def P2(m: int) -> Indecomposable:
    return Indecomposable("P2", m)


def B2(m: int, r: int) -> Indecomposable:
    return Indecomposable("B2", m, r)


def bipicket(m: int, r: int) -> list[Indecomposable]:
    """B2(m, r), expanding the alias B2(m, m-1) = P2(m) + P0(m-1)."""
    if r == m - 1:
        return [P2(m), P0(m - 1)]
    return [B2(m, r)]


def arc_summands(m: int, r: int) -> list[Indecomposable]:
    """Summands contributed by one arc; an infinite m encodes a pole at r."""
    if m == INF:
        return [P1(r)]
    return bipicket(m, r)


@dataclass(frozen=True)
class Decomposition:
    """A finite multiset of indecomposables, kept sorted."""

    summands: tuple = ()

    def __post_init__(self):
        items = tuple(sorted(self.summands, key=Indecomposable.sort_key))
        object.__setattr__(self, "summands", items)

    @classmethod
    def of(cls, items: Iterable[Indecomposable]) -> "Decomposition":
        return cls(tuple(items))

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def counts(self) -> Counter:
        return Counter(self.summands)

    def __add__(self, other: "Decomposition") -> "Decomposition":
        return Decomposition(self.summands + tuple(other))

    def __sub__(self, other: "Decomposition") -> "Decomposition":
        c = self.counts()
        c.subtract(Counter(other))
        if any(v < 0 for v in c.values()):
            raise ValueError("summands to remove are not present")
        return Decomposition(tuple(c.elements()))

    @property
    def beta(self) -> Partition:
        return Partition(sorted((p for x in self for p in x.ambient), reverse=True))

    @property
    def alpha(self) -> Partition:
        return Partition(sorted((p for x in self for p in x.subspace_type), reverse=True))

    @property
    def ambient_dim(self) -> int:
        return sum(sum(x.ambient) for x in self)

    @property
    def subspace_dim(self) -> int:
        return sum(x.subspace_dim for x in self)

    def __str__(self) -> str:
        return " + ".join(str(x) for x in self) if self.summands else "0"

    def to_json(self) -> list:
        return [x.to_json() for x in self]

    @staticmethod
    def from_json(items: list) -> "Decomposition":
        return Decomposition(tuple(Indecomposable.from_json(d) for d in items))
