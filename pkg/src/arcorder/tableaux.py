"""LR-tableaux and Klein tableaux with entries at most 2.

Cells are described in the column-length convention: column i of the outer
shape beta has height beta_i; rows 1..gamma_i are empty, rows up to zeta_i
hold a 1 and rows up to beta_i hold a 2.  Most computations work with row
lengths instead, i.e. with the conjugate partitions: row j has
conj(gamma)_j empty boxes, then the 1s, then the 2s.

A Klein tableau attaches to every 2 in row m a subscript r < m.  Since the
2s of a row are interchangeable, the subscripts are stored as a multiset of
pairs (m, r), which is literally the arc multiset of the arc diagram.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterator

from .partitions import (
    Partition,
    as_partition,
    conjugate,
    contains,
    horizontal_strips_below,
    is_horizontal_strip,
    leq_dominance,
)


class UnsupportedType(ValueError):
    """Raised for subspace types with parts larger than 2."""


class InvalidTableau(ValueError):
    def __init__(self, diagnosis: "Diagnosis"):
        super().__init__(f"{diagnosis.code}: {diagnosis.detail}")
        self.diagnosis = diagnosis


@dataclass(frozen=True)
class Diagnosis:
    ok: bool
    code: str = ""
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


OK = Diagnosis(True)


def _row(lam: Partition, j: int) -> int:
    return lam.part(j)


@dataclass(frozen=True)
class LRTableau:
    """The chain gamma <= zeta <= beta; entries 1 on zeta/gamma, 2 on beta/zeta."""

    gamma: Partition
    zeta: Partition
    beta: Partition

    def __post_init__(self):
        object.__setattr__(self, "gamma", as_partition(self.gamma))
        object.__setattr__(self, "zeta", as_partition(self.zeta))
        object.__setattr__(self, "beta", as_partition(self.beta))

    @property
    def height(self) -> int:
        return self.beta[0] if self.beta else 0

    def rows(self) -> tuple[Partition, Partition, Partition]:
        return conjugate(self.gamma), conjugate(self.zeta), conjugate(self.beta)

    def ones(self) -> list[int]:
        """ones[j] = number of 1s in row j (index 0 unused)."""
        g, z, _ = self.rows()
        return [0] + [_row(z, j) - _row(g, j) for j in range(1, self.height + 1)]

    def twos(self) -> list[int]:
        _, z, b = self.rows()
        return [0] + [_row(b, j) - _row(z, j) for j in range(1, self.height + 1)]

    @property
    def alpha(self) -> Partition:
        n1, n2 = sum(self.ones()), sum(self.twos())
        if n2 > n1:
            raise InvalidTableau(Diagnosis(False, "lattice", "more 2s than 1s"))
        return conjugate(Partition((n1, n2)))

    def type(self) -> tuple[Partition, Partition, Partition]:
        return self.alpha, self.beta, self.gamma

    def cell(self, row: int, col: int) -> int | None:
        """Entry at (row, col), 1-based: None outside beta, 0 for empty."""
        b = self.beta.part(col)
        if row < 1 or row > b:
            return None
        if row <= self.gamma.part(col):
            return 0
        return 1 if row <= self.zeta.part(col) else 2

    def to_json(self) -> dict:
        return {"gamma": list(self.gamma), "zeta": list(self.zeta), "beta": list(self.beta)}


def _lattice_ok(ones: list[int], twos: list[int]) -> int:
    """Return 0 if the row reading is a lattice word, else the first bad row."""
    seen_ones = 0
    seen_twos = 0
    for j in range(1, len(ones)):
        seen_twos += twos[j]
        if seen_twos > seen_ones:
            return j
        seen_ones += ones[j]
    return 0


def validate_lr(t: LRTableau) -> Diagnosis:
    if not contains(t.zeta, t.gamma) or not contains(t.beta, t.zeta):
        return Diagnosis(False, "containment", "need gamma <= zeta <= beta")
    g, z, b = t.rows()
    if not is_horizontal_strip(z, g):
        col = next(i for i in range(len(t.zeta)) if t.zeta[i] - t.gamma.part(i + 1) > 1)
        return Diagnosis(False, "column-strict", f"two 1s in column {col + 1}")
    if not is_horizontal_strip(b, z):
        col = next(i for i in range(len(t.beta)) if t.beta[i] - t.zeta.part(i + 1) > 1)
        return Diagnosis(False, "column-strict", f"two 2s in column {col + 1}")
    bad = _lattice_ok(t.ones(), t.twos())
    if bad:
        return Diagnosis(False, "lattice", f"row {bad} brings more 2s than 1s above it")
    return OK


def count_crossings(arcs, poles) -> int:
    arcs = list(arcs)
    x = 0
    for i in range(len(arcs)):
        m, r = arcs[i]
        for j in range(i + 1, len(arcs)):
            m2, r2 = arcs[j]
            if m > m2 > r > r2 or m2 > m > r2 > r:
                x += 1
        for p in poles:
            if m > p > r:
                x += 1
    return x


@dataclass(frozen=True)
class KleinTableau:
    """An LR-tableau together with the multiset of subscripted 2s.

    arcs holds one pair (m, r) per symbol 2_r in row m; it is kept sorted in
    decreasing lexicographic order, so equality is structural.
    """

    lr: LRTableau
    arcs: tuple = field(default=())

    def __post_init__(self):
        arcs = tuple(sorted(((int(m), int(r)) for m, r in self.arcs), reverse=True))
        object.__setattr__(self, "arcs", arcs)

    @property
    def alpha(self) -> Partition:
        return self.lr.alpha

    @property
    def beta(self) -> Partition:
        return self.lr.beta

    @property
    def gamma(self) -> Partition:
        return self.lr.gamma

    @property
    def zeta(self) -> Partition:
        return self.lr.zeta

    def type(self) -> tuple[Partition, Partition, Partition]:
        return self.lr.type()

    @property
    def poles(self) -> tuple:
        ones = self.lr.ones()
        indeg = Counter(r for _, r in self.arcs)
        out = []
        for r in range(len(ones) - 1, 0, -1):
            out.extend([r] * (ones[r] - indeg.get(r, 0)))
        return tuple(out)

    def subscripts(self, m: int) -> list[int]:
        return sorted(r for mm, r in self.arcs if mm == m)

    @property
    def crossings(self) -> int:
        return count_crossings(self.arcs, self.poles)

    def sort_key(self):
        return (self.crossings, tuple((-m, -r) for m, r in self.arcs), self.type())

    def to_json(self) -> dict:
        a, b, g = self.type()
        return {
            "alpha": list(a),
            "beta": list(b),
            "gamma": list(g),
            "arcs": [list(x) for x in self.arcs],
            "poles": list(self.poles),
        }


def _forced(t: LRTableau, m: int) -> int:
    """Number of 2s in row m sitting directly below a 1."""
    g, z, b = t.rows()
    lo, hi = _row(z, m), _row(b, m)
    above_lo, above_hi = _row(g, m - 1), _row(z, m - 1)
    return sum(1 for c in range(lo + 1, hi + 1) if above_lo < c <= above_hi)


def validate_klein(pi: KleinTableau) -> Diagnosis:
    d = validate_lr(pi.lr)
    if not d:
        return d
    twos = pi.lr.twos()
    ones = pi.lr.ones()
    e = pi.lr.height
    out = Counter(m for m, _ in pi.arcs)
    for m, r in pi.arcs:
        if not 1 <= r <= m - 1:
            return Diagnosis(False, "a", f"subscript {r} on a 2 in row {m}")
    for m in range(1, e + 1):
        if out.get(m, 0) != twos[m]:
            return Diagnosis(False, "row-count", f"row {m} has {twos[m]} 2s but {out.get(m, 0)} subscripts")
    for m in out:
        if m > e:
            return Diagnosis(False, "row-count", f"row {m} lies outside the tableau")
    for m in range(2, e + 1):
        f = _forced(pi.lr, m)
        if f and sum(1 for mm, r in pi.arcs if mm == m and r == m - 1) < f:
            return Diagnosis(False, "b", f"a 2 below a 1 in row {m} needs subscript {m - 1}")
    indeg = Counter(r for _, r in pi.arcs)
    for r, c in sorted(indeg.items()):
        if c > ones[r]:
            return Diagnosis(False, "c", f"{c} symbols 2_{r} but {ones[r]} 1s in row {r}")
    return OK


def _check_type(alpha, beta, gamma):
    alpha, beta, gamma = as_partition(alpha), as_partition(beta), as_partition(gamma)
    if alpha and alpha[0] > 2:
        raise UnsupportedType(f"subspace type {list(alpha)} has a part larger than 2")
    return alpha, beta, gamma


def enumerate_lr(alpha, beta, gamma) -> list[LRTableau]:
    alpha, beta, gamma = _check_type(alpha, beta, gamma)
    if alpha.size + gamma.size != beta.size or not contains(beta, gamma):
        return []
    ab = conjugate(alpha)
    n1, n2 = ab.part(1), ab.part(2)
    g, b = conjugate(gamma), conjugate(beta)
    e = len(b)
    choices = []
    for j in range(1, e + 1):
        lo = max(_row(g, j), _row(b, j + 1))
        hi = _row(b, j) if j == 1 else min(_row(b, j), _row(g, j - 1))
        if lo > hi:
            return []
        choices.append(range(lo, hi + 1))
    out = []

    def rec(j: int, acc: list[int]):
        if j > e:
            try:
                zeta = conjugate(Partition(acc))
            except ValueError:
                return
            t = LRTableau(gamma, zeta, beta)
            if sum(t.ones()) == n1 and sum(t.twos()) == n2 and validate_lr(t):
                out.append(t)
            return
        for z in choices[j - 1]:
            if acc and z > acc[-1]:
                continue
            rec(j + 1, acc + [z])

    rec(1, [])
    out.sort(key=lambda t: tuple(t.zeta))
    return out


def refinements(t: LRTableau) -> list[KleinTableau]:
    ones, twos = t.ones(), t.twos()
    e = t.height
    results = []

    def rec(m: int, cap: list[int], arcs: list):
        if m > e:
            results.append(KleinTableau(t, arcs))
            return
        if twos[m] == 0:
            rec(m + 1, cap, arcs)
            return
        f = _forced(t, m)
        if f > cap[m - 1]:
            return
        cap = list(cap)
        cap[m - 1] -= f
        base = arcs + [(m, m - 1)] * f
        free = twos[m] - f
        # decreasing subscripts first
        for combo in combinations_with_replacement(range(m - 1, 0, -1), free):
            use = Counter(combo)
            if any(use[r] > cap[r] for r in use):
                continue
            cap2 = list(cap)
            for r, c in use.items():
                cap2[r] -= c
            rec(m + 1, cap2, base + [(m, r) for r in combo])

    rec(1, list(ones), [])
    uniq = sorted(set(results), key=KleinTableau.sort_key)
    return uniq


def _greedy(t: LRTableau, largest: bool) -> KleinTableau:
    ones, twos = t.ones(), t.twos()
    cap = list(ones)
    arcs = []
    for m in range(1, t.height + 1):
        if not twos[m]:
            continue
        f = _forced(t, m)
        cap[m - 1] -= f
        arcs += [(m, m - 1)] * f
        order = range(m - 1, 0, -1) if largest else range(1, m)
        for _ in range(twos[m] - f):
            r = next((r for r in order if cap[r] > 0), None)
            if r is None:
                raise InvalidTableau(Diagnosis(False, "c", f"no subscript available in row {m}"))
            cap[r] -= 1
            arcs.append((m, r))
    return KleinTableau(t, arcs)


def dominant_refinement(t: LRTableau) -> KleinTableau:
    """Give each 2, row by row from the top, the largest available subscript."""
    return _greedy(t, largest=True)


def maximal_refinement(t: LRTableau) -> KleinTableau:
    """Give each 2, row by row from the top, the smallest available subscript."""
    return _greedy(t, largest=False)


def deviation(pi: KleinTableau) -> int:
    """Klein's deviation from dominance, evaluated on the chain of shapes
    gamma, zeta = beta^0, beta^1, ..., beta^s = beta where beta^j adds
    the boxes 2_i with i <= j."""
    t = pi.lr
    e = t.height
    g, z, _ = t.rows()
    zr = [0] + [_row(z, k) for k in range(1, e + 2)]
    gr = [0] + [_row(g, k) for k in range(1, e + 2)]
    s = max(e - 1, 1)
    # bj[j][k] = row k length of beta^j
    bj = []
    for j in range(s + 1):
        row = list(zr)
        for m, r in pi.arcs:
            if r <= j:
                row[m] += 1
        bj.append(row)
    size = [sum(row) for row in bj]
    x = 0
    for j in range(1, s + 1):
        first = zr[j] - gr[j] + size[j - 1] - size[j]
        x += first * sum(bj[j - 1][k] - zr[k] for k in range(j + 1, e + 1))
        for l in range(j + 1, e):
            grow = bj[j][l + 1] - bj[j - 1][l + 1]
            if grow:
                x += grow * sum(bj[j - 1][k] - zr[k] for k in range(j + 1, l + 1))
    return x


def lr_leq_part(g1: LRTableau, g2: LRTableau) -> bool:
    if g1.type() != g2.type():
        raise ValueError("LR-tableaux of different types")
    return leq_dominance(g1.zeta, g2.zeta)


def type_of(pi: KleinTableau) -> tuple[Partition, Partition, Partition]:
    return pi.type()


def iter_lr_tableaux(beta) -> Iterator[LRTableau]:
    """Every LR-tableau with outer shape beta and entries at most 2."""
    beta = as_partition(beta)
    b = conjugate(beta)
    for z in horizontal_strips_below(b):
        for g in horizontal_strips_below(z):
            t = LRTableau(conjugate(g), conjugate(z), beta)
            if _lattice_ok(t.ones(), t.twos()) == 0:
                yield t


def iter_klein_tableaux(beta) -> Iterator[KleinTableau]:
    for t in iter_lr_tableaux(beta):
        yield from refinements(t)


def klein_by_type(beta) -> dict:
    """Group all Klein tableaux with outer shape beta by their type."""
    out: dict = {}
    for pi in iter_klein_tableaux(beta):
        out.setdefault(pi.type(), []).append(pi)
    for v in out.values():
        v.sort(key=KleinTableau.sort_key)
    return out
