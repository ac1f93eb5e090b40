"""Partitions as immutable value objects.

Parts are stored weakly decreasing with no trailing zeros.  Throughout the
package a partition lists the column lengths of a Young diagram, so the
conjugate lists the row lengths.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = [int(x) for x in parts]
        while values and values[-1] == 0:
            values.pop()
        for i, x in enumerate(values):
            if x < 1:
                raise ValueError(f"partition parts must be positive, got {values}")
            if i and values[i - 1] < x:
                raise ValueError(f"partition parts must be weakly decreasing, got {values}")
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part access, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> Counter:
        return Counter(self)


def as_partition(parts: Iterable[int]) -> Partition:
    return parts if isinstance(parts, Partition) else Partition(parts)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def moment(lam: Iterable[int]) -> int:
    """n(lambda) = sum of lambda_i * (i - 1)."""
    return sum(i * x for i, x in enumerate(as_partition(lam)))


def leq_dominance(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """Prefix-sum comparison, missing parts read as 0."""
    lam, mu = as_partition(lam), as_partition(mu)
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam.part(i + 1)
        b += mu.part(i + 1)
        if a > b:
            return False
    return True


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    outer, inner = as_partition(outer), as_partition(inner)
    if len(inner) > len(outer):
        return False
    return all(x <= outer[i] for i, x in enumerate(inner))


def is_horizontal_strip(outer: Iterable[int], inner: Iterable[int]) -> bool:
    """outer/inner has at most one cell per column: outer_{i+1} <= inner_i."""
    outer, inner = as_partition(outer), as_partition(inner)
    if not contains(outer, inner):
        return False
    return all(outer.part(i + 1) <= inner.part(i) for i in range(1, len(outer)))


def dim_end(lam: Iterable[int]) -> int:
    """Dimension of the endomorphism ring of the operator of type lambda."""
    lam = as_partition(lam)
    return sum(min(a, b) for a in lam for b in lam)


def hom_dim_operators(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Dimension of k[T]-homomorphisms between operators of types lam, mu."""
    return sum(min(a, b) for a in as_partition(lam) for b in as_partition(mu))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def subpartitions(outer: Iterable[int]) -> Iterator[Partition]:
    """All partitions contained in outer."""
    outer = as_partition(outer)

    def rec(i: int, bound: int, acc: list[int]):
        if i == len(outer) or bound == 0:
            yield Partition(acc)
            return
        for x in range(min(bound, outer[i]), -1, -1):
            if x == 0:
                yield Partition(acc)
            else:
                yield from rec(i + 1, x, acc + [x])

    yield from rec(0, outer[0] if outer else 0, [])


def horizontal_strips_below(outer: Iterable[int]) -> Iterator[Partition]:
    """All inner with outer/inner a horizontal strip (rows coordinates)."""
    outer = as_partition(outer)
    k = len(outer)
    # inner_i ranges over [outer_{i+1}, outer_i]
    ranges = [range(outer[i], outer.part(i + 2) - 1, -1) for i in range(k)]

    def rec(i: int, acc: list[int]):
        if i == k:
            yield Partition(acc)
            return
        for x in ranges[i]:
            yield from rec(i + 1, acc + [x])

    yield from rec(0, [])
