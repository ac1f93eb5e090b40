"""Arc diagrams and the four local moves.

An arc (m, r) joins vertex m to a smaller vertex r; a pole sits on a single
vertex.  It often helps to read a pole at r as an arc (INF, r) that starts
beyond every vertex.  Then all four moves act on two crossing arcs
(M, R), (N, S) with M > N > R > S:

    A, B:  nest them     ->  (M, S), (N, R)
    C, D:  separate them ->  (M, N), (R, S)

where B and D are the cases M = INF.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .partitions import Partition, as_partition, conjugate
from .summands import INF, Decomposition, arc_summands
from .tableaux import (
    Diagnosis,
    InvalidTableau,
    KleinTableau,
    LRTableau,
    count_crossings,
    validate_klein,
)


@dataclass(frozen=True)
class ArcDiagram:
    vertex_count: int
    arcs: tuple = field(default=())
    poles: tuple = field(default=())

    def __post_init__(self):
        arcs = tuple(sorted(((int(m), int(r)) for m, r in self.arcs), reverse=True))
        poles = tuple(sorted((int(p) for p in self.poles), reverse=True))
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "poles", poles)
        for m, r in arcs:
            if not self.vertex_count >= m > r >= 1:
                raise ValueError(f"arc ({m},{r}) outside vertices 1..{self.vertex_count}")
        for p in poles:
            if not 1 <= p <= self.vertex_count:
                raise ValueError(f"pole {p} outside vertices 1..{self.vertex_count}")

    def generalized(self) -> Counter:
        c = Counter(self.arcs)
        for p in self.poles:
            c[(INF, p)] += 1
        return c

    @staticmethod
    def from_generalized(vertex_count: int, items) -> "ArcDiagram":
        arcs, poles = [], []
        for m, r in items:
            (poles.append(r) if m == INF else arcs.append((m, r)))
        return ArcDiagram(vertex_count, tuple(arcs), tuple(poles))

    def to_json(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "arcs": [list(a) for a in self.arcs],
            "poles": list(self.poles),
        }


def crossings(delta) -> int:
    """Arc-arc crossings m > m' > r > r' plus arc-pole crossings m > p > r."""
    return count_crossings(delta.arcs, delta.poles)


def arc_diagram_of(pi: KleinTableau) -> ArcDiagram:
    return ArcDiagram(pi.lr.height, pi.arcs, pi.poles)


def klein_of(delta: ArcDiagram, type_) -> KleinTableau:
    """Rebuild the Klein tableau of a diagram of the given type (alpha, beta, gamma)."""
    alpha, beta, gamma = (as_partition(x) for x in type_)
    e = beta[0] if beta else 0
    for m, r in delta.arcs:
        if m > e:
            raise InvalidTableau(Diagnosis(False, "row-count", f"arc ({m},{r}) beyond row {e}"))
    for p in delta.poles:
        if p > e:
            raise InvalidTableau(Diagnosis(False, "row-count", f"pole {p} beyond row {e}"))
    b, g = conjugate(beta), conjugate(gamma)
    out = Counter(m for m, _ in delta.arcs)
    zrows = [b.part(j) - out.get(j, 0) for j in range(1, e + 1)]
    if any(x < 0 for x in zrows) or any(zrows[i] < zrows[i + 1] for i in range(len(zrows) - 1)):
        raise InvalidTableau(Diagnosis(False, "row-count", "out-degrees do not fit the outer shape"))
    zeta = conjugate(Partition(zrows))
    lr = LRTableau(gamma, zeta, beta)
    pi = KleinTableau(lr, delta.arcs)
    d = validate_klein(pi)
    if not d:
        raise InvalidTableau(d)
    if Counter(pi.poles) != Counter(delta.poles):
        raise InvalidTableau(Diagnosis(False, "row-count", "poles do not match the surplus 1s"))
    if pi.alpha != alpha:
        raise InvalidTableau(Diagnosis(False, "row-count", f"subspace type {list(pi.alpha)} != {list(alpha)}"))
    return pi


_KINDS = ("A", "B", "C", "D")


@dataclass(frozen=True)
class Move:
    """A down-move: it replaces the source pattern of Z by the target pattern."""

    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown move kind {self.kind!r}")
        p = tuple(int(x) for x in self.params)
        object.__setattr__(self, "params", p)
        if self.kind in "AC":
            if len(p) != 4 or not p[0] > p[1] > p[2] > p[3] >= 1:
                raise ValueError(f"{self.kind} needs m > n > r > s >= 1, got {p}")
        else:
            if len(p) != 3 or not p[0] > p[1] > p[2] >= 1:
                raise ValueError(f"{self.kind} needs m > r > s >= 1, got {p}")

    @property
    def prime(self) -> bool:
        """A or B producing a short arc (x+1, x), that is P2(x+1) + P0(x)."""
        if self.kind == "A":
            return self.params[1] == self.params[2] + 1
        return self.kind == "B" and self.params[0] == self.params[1] + 1

    def _four(self) -> tuple:
        if self.kind in "AC":
            return self.params
        return (INF,) + self.params

    @property
    def source(self) -> list:
        M, N, R, S = self._four()
        return [(M, R), (N, S)]

    @property
    def target(self) -> list:
        M, N, R, S = self._four()
        if self.kind in "AB":
            return [(M, S), (N, R)]
        return [(M, N), (R, S)]

    @property
    def removed(self) -> Decomposition:
        return Decomposition(tuple(x for a in self.source for x in arc_summands(*a)))

    @property
    def added(self) -> Decomposition:
        return Decomposition(tuple(x for a in self.target for x in arc_summands(*a)))

    def sort_key(self):
        return (_KINDS.index(self.kind), self.params)

    def __str__(self) -> str:
        return f"{self.name}{self.params}"

    @property
    def name(self) -> str:
        return self.kind + ("'" if self.prime else "")

    def to_json(self) -> dict:
        names = ("m", "n", "r", "s") if self.kind in "AC" else ("m", "r", "s")
        d = {"kind": self.kind}
        d.update(zip(names, self.params))
        if self.prime:
            d["prime"] = True
        return d

    @staticmethod
    def from_json(d: dict) -> "Move":
        names = ("m", "n", "r", "s") if d["kind"] in "AC" else ("m", "r", "s")
        return Move(d["kind"], tuple(d[k] for k in names))


class PatternAbsent(ValueError):
    pass


def apply_move(delta: ArcDiagram, move: Move, up: bool = False) -> ArcDiagram:
    """Apply a down-move, or its inverse when up is true."""
    src, dst = (move.target, move.source) if up else (move.source, move.target)
    have = delta.generalized()
    need = Counter(src)
    for a, c in need.items():
        if have.get(a, 0) < c:
            raise PatternAbsent(f"{move} needs {a} which is not in the diagram")
    have.subtract(need)
    have.update(dst)
    for m, r in dst:
        if m != INF and m > delta.vertex_count:
            raise PatternAbsent(f"{move} leaves the vertex range")
    return ArcDiagram.from_generalized(delta.vertex_count, have.elements())


def enumerate_down_moves(delta: ArcDiagram) -> list:
    """All single down-moves of the diagram, in canonical order."""
    items = sorted(delta.generalized())
    moves = set()
    for i, (m1, r1) in enumerate(items):
        for m2, r2 in items[i:]:
            if (m1, r1) == (m2, r2):
                continue
            (M, R), (N, S) = sorted([(m1, r1), (m2, r2)], reverse=True)
            if not M > N > R > S:
                continue
            if N == INF:
                continue
            if M == INF:
                moves.add(Move("B", (N, R, S)))
                moves.add(Move("D", (N, R, S)))
            else:
                moves.add(Move("A", (M, N, R, S)))
                moves.add(Move("C", (M, N, R, S)))
    out = []
    for mv in sorted(moves, key=Move.sort_key):
        out.append((mv, apply_move(delta, mv)))
    return out


def enumerate_up_moves(delta: ArcDiagram) -> list:
    """All single up-moves: Moves whose target pattern is present."""
    gen = delta.generalized()
    cand = set()
    keys = sorted(gen)
    for i, a in enumerate(keys):
        for b in keys[i:]:
            if a == b and gen[a] < 2:
                continue
            for mv in _moves_with_target(a, b):
                cand.add(mv)
    out = []
    for mv in sorted(cand, key=Move.sort_key):
        try:
            out.append((mv, apply_move(delta, mv, up=True)))
        except PatternAbsent:
            pass
    return out


def _moves_with_target(a, b):
    (p, q), (u, v) = sorted([a, b], reverse=True)
    # nested target (M,S),(N,R): M > N > R > S
    if p > u > v > q and u != INF:
        M, S, N, R = p, q, u, v
        if M == INF:
            yield Move("B", (N, R, S))
        else:
            yield Move("A", (M, N, R, S))
    # separated target (M,N),(R,S): M > N > R > S
    if p > q > u > v:
        M, N, R, S = p, q, u, v
        if M == INF:
            yield Move("D", (N, R, S))
        else:
            yield Move("C", (M, N, R, S))
