"""Deciding and witnessing the order on objects of a fixed partition type.

Every order here compares two Klein tableaux Y, Z of the same type.  The hom
order is decided by finitely many Hom dimensions.  When it holds, a chain of
down-moves from Z to Y is produced one step at a time, each step keeping the
hom relation intact, and each move carries a short exact sequence.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .arcs import ArcDiagram, Move, apply_move, arc_diagram_of, crossings, enumerate_down_moves, klein_of
from .category import TypeMismatch, band_positions, delta_matrices, hom_vector, test_object
from .summands import INF, Decomposition, Indecomposable, arc_summands
from .tableaux import KleinTableau

__all__ = [
    "OrderVerdict",
    "SESWitness",
    "StepReport",
    "leq_hom",
    "leq_deg",
    "leq_ext",
    "find_move_step",
    "parallelogram_step",
    "move_sequence",
    "leq_arc_bfs",
    "unit_chain_exists",
    "ext_witness",
    "OrderError",
]


class OrderError(RuntimeError):
    """An internal invariant of the move algorithm failed."""


@dataclass(frozen=True)
class OrderVerdict:
    leq: bool
    witness: tuple | None = None
    certificate: Indecomposable | None = None
    ext: tuple | None = None

    def __bool__(self) -> bool:
        return self.leq

    def to_json(self) -> dict:
        d = {"leq": self.leq}
        if self.witness is not None:
            d["witness"] = [m.to_json() for m in self.witness]
        if self.certificate is not None:
            d["certificate"] = self.certificate.to_json()
        if self.ext is not None:
            d["ext"] = [w.to_json() for w in self.ext]
        return d


@dataclass(frozen=True)
class SESWitness:
    """A short exact sequence 0 -> sub -> middle -> quotient -> 0."""

    sub: Decomposition
    middle: Decomposition
    quotient: Decomposition

    def dims_additive(self) -> bool:
        ends = self.sub + self.quotient
        return (
            self.middle.ambient_dim == ends.ambient_dim
            and self.middle.subspace_dim == ends.subspace_dim
            and self.middle.beta == ends.beta
            and self.middle.alpha == ends.alpha
        )

    def to_json(self) -> dict:
        return {
            "sub": self.sub.to_json(),
            "middle": self.middle.to_json(),
            "quotient": self.quotient.to_json(),
        }


def _check_same_type(y: KleinTableau, z: KleinTableau):
    if y.type() != z.type():
        raise TypeMismatch(f"types differ: {y.type()} vs {z.type()}")


def leq_hom(y: KleinTableau, z: KleinTableau) -> OrderVerdict:
    """Y <= Z iff [X, Y] <= [X, Z] for every test object X on the band."""
    _check_same_type(y, z)
    hy, hz = hom_vector(y), hom_vector(z)
    for pos, a, b in zip(band_positions(y.lr.height), hy, hz):
        if b < a:
            return OrderVerdict(False, certificate=test_object(pos))
    return OrderVerdict(True)


def leq_deg(y: KleinTableau, z: KleinTableau) -> OrderVerdict:
    """Degeneration order.

    Over an algebraically closed field it coincides with the hom order, so
    no orbit closure is computed here.
    """
    return leq_hom(y, z)


# ------------------------------------------------------------ one step


@dataclass
class StepReport:
    """What the parallelogram scan found, for inspection and tests."""

    run: tuple | None = None  # (row, t0, t1) of the positive run
    right: tuple | None = None  # generalized arc of X''
    left: tuple | None = None  # generalized arc of X'
    move: Move | None = None
    strategy: str = "parallelogram"
    reason: str = ""


class _Band:
    """delta H and delta M on the extended band of height n = N + 1.

    Canonical cells are (l, t) with 0 <= t <= l - 1 <= n.  Column t = 0 and
    row l = n + 1 both hold the P1 row, the diagonal t = l - 1 holds the pair
    P2(l) + P0(l-1), and everything else is B2(l, t); rows N < l <= n read
    the P1 row again.  Cells outside the fundamental domain are folded back
    by the glide reflection of the band.
    """

    def __init__(self, y: KleinTableau, z: KleinTableau):
        self.dH, _ = delta_matrices(y, z)
        self.N = self.dH.N
        self.n = self.N + 1
        self.arcs = Counter(z.arcs)
        self.arcs.subtract(Counter(y.arcs))
        self.poles = Counter(z.poles)
        self.poles.subtract(Counter(y.poles))

    def canon(self, l: int, t: int):
        n = self.n
        for _ in range(4):
            if l > n + 1:
                if t < 1:
                    return None
                l, t = t, l - n - 1
            elif t < 0:
                l, t = n + 1 + t, l
            else:
                break
        if 1 <= l <= n + 1 and 0 <= t <= l - 1:
            return (l, t)
        return None

    def h(self, l: int, t: int) -> int:
        c = self.canon(l, t)
        if c is None:
            return 0
        l, t = c
        if t == l - 1:
            return 0
        if t == 0:
            return self.dH.p1(l)
        if l > self.N:
            return self.dH.p1(t)
        return self.dH.B.get((l, t), 0)

    def d(self, l: int, t: int) -> int:
        c = self.canon(l, t)
        if c is None:
            return 0
        l, t = c
        if t == 0:
            return self.poles.get(l, 0)
        if l == self.n + 1:
            return self.poles.get(t, 0)
        if l > self.N:
            return 0
        return self.arcs.get((l, t), 0)

    def arc(self, l: int, t: int):
        """The generalized arc sitting at a cell; a pole is (INF, r)."""
        l, t = self.canon(l, t)
        if t == 0:
            return (INF, l)
        if l == self.n + 1:
            return (INF, t)
        return (l, t)


def _classify(left, right):
    (m1, r1), (m2, r2) = left, right
    if m2 > m1 > r2 > r1:
        M, N, R, S = m2, m1, r2, r1
        return Move("B", (N, R, S)) if M == INF else Move("A", (M, N, R, S))
    if m1 > m2 > r1 > r2:
        M, N, R, S = m1, m2, r1, r2
        return Move("D", (N, R, S)) if M == INF else Move("C", (M, N, R, S))
    return None


def parallelogram_step(y: KleinTableau, z: KleinTableau) -> StepReport:
    """Locate the parallelogram of positive Hom differences and its move.

    Only the scan is done here; the caller validates the move.
    """
    band = _Band(y, z)
    n = band.n
    rep = StepReport()
    run = None
    starts = [(l, t) for l in range(3, band.N + 1) for t in range(1, l - 1)]
    starts += [(l, 0) for l in range(1, n + 1)]
    for l, t in starts:
        if band.h(l, t) > 0:
            t0 = t1 = t
            while t0 - 1 > l - n - 1 and band.h(l, t0 - 1) > 0:
                t0 -= 1
            while t1 + 1 < l and band.h(l, t1 + 1) > 0:
                t1 += 1
            run = (l, t0, t1)
            break
    if run is None:
        rep.reason = "no positive entry"
        return rep
    rep.run = run
    l0, t0, t1 = run
    width = t1 - t0
    right = None
    for u in range(0, 2 * n + 3):
        for w in range(width + 1):
            if band.d(l0 + u, t0 + w) > 0:
                right = (u, w)
                break
        if right:
            break
    if right is None:
        rep.reason = "right corner not found"
        return rep
    u2, w2 = right
    rep.right = band.arc(l0 + u2, t0 + w2)
    left = None
    for u in range(0, -2 * n - 3, -1):
        hits = [j for j in range(w2 + 1) if band.d(l0 + u - 1, t0 + j - 1) > 0]
        if hits:
            left = (u - 1, hits[-1] - 1)
            break
    if left is None:
        rep.reason = "left corner not found"
        return rep
    u1, w1 = left
    rep.left = band.arc(l0 + u1, t0 + w1)
    rep.move = _classify(rep.left, rep.right)
    if rep.move is None:
        rep.reason = f"corners {rep.left}, {rep.right} do not cross"
    return rep


def _apply(z: KleinTableau, move: Move) -> KleinTableau:
    return klein_of(apply_move(arc_diagram_of(z), move), z.type())


def _baseline(y: KleinTableau, z: KleinTableau):
    for mv, delta in enumerate_down_moves(arc_diagram_of(z)):
        z2 = klein_of(delta, z.type())
        if leq_hom(y, z2).leq:
            return mv, z2
    raise OrderError("no down-move keeps the hom relation")


def find_move_step(y: KleinTableau, z: KleinTableau, strategy: str = "baseline", report: StepReport | None = None):
    """One down-move z -> z' with y <= z' still holding.

    strategy "baseline" takes the first qualifying move in canonical order;
    "parallelogram" reads the move off the Hom matrix and falls back to the
    baseline if the scan does not produce a valid move.
    """
    _check_same_type(y, z)
    if y == z:
        raise ValueError("y equals z, there is nothing to move")
    if not leq_hom(y, z).leq:
        raise ValueError("y <= z does not hold in the hom order")
    if strategy not in ("baseline", "parallelogram"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "parallelogram":
        rep = parallelogram_step(y, z)
        if rep.move is not None:
            try:
                z2 = _apply(z, rep.move)
            except ValueError as e:
                rep.reason = f"move does not apply: {e}"
            else:
                if leq_hom(y, z2).leq:
                    if report is not None:
                        report.__dict__.update(rep.__dict__)
                    return rep.move, z2
                rep.reason = "move breaks the hom relation"
        rep.strategy = "baseline"
        if report is not None:
            report.__dict__.update(rep.__dict__)
    elif report is not None:
        report.strategy = "baseline"
    return _baseline(y, z)


def move_sequence(y: KleinTableau, z: KleinTableau, strategy: str = "baseline") -> list:
    """Moves leading from z down to y, largest object first."""
    _check_same_type(y, z)
    if not leq_hom(y, z).leq:
        raise ValueError("y <= z does not hold in the hom order")
    moves = []
    cur = z
    budget = z.crossings - y.crossings
    while cur != y:
        if len(moves) >= budget:
            raise OrderError("move sequence longer than the crossing difference")
        mv, cur = find_move_step(y, cur, strategy)
        moves.append(mv)
    delta = arc_diagram_of(z)
    for mv in moves:
        delta = apply_move(delta, mv)
    if delta != arc_diagram_of(y):
        raise OrderError("replaying the moves does not reach y")
    return moves


def leq_ext(y: KleinTableau, z: KleinTableau, strategy: str = "baseline") -> OrderVerdict:
    """Ext order, witnessed by one short exact sequence per move."""
    v = leq_hom(y, z)
    if not v.leq:
        return v
    moves = move_sequence(y, z, strategy)
    return OrderVerdict(True, witness=tuple(moves), ext=tuple(ext_witness(m) for m in moves))


# ------------------------------------------------------------ search


def _bfs(y: KleinTableau, z: KleinTableau, unit: bool) -> bool:
    _check_same_type(y, z)
    target = arc_diagram_of(y)
    floor = y.crossings
    start = arc_diagram_of(z)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == target:
            return True
        c = crossings(cur)
        for _, nxt in enumerate_down_moves(cur):
            if nxt in seen:
                continue
            cn = crossings(nxt)
            if unit and cn != c - 1:
                continue
            if cn <= floor and nxt != target:
                continue
            seen.add(nxt)
            queue.append(nxt)
    return False


def leq_arc_bfs(y: KleinTableau, z: KleinTableau) -> bool:
    """Arc order by exhaustive search over down-moves starting at z."""
    return _bfs(y, z, unit=False)


def unit_chain_exists(y: KleinTableau, z: KleinTableau) -> bool:
    """Whether z reaches y using only moves that remove exactly one crossing."""
    return _bfs(y, z, unit=True)


# ------------------------------------------------------------ witnesses


def _summands(arc) -> Decomposition:
    return Decomposition(tuple(arc_summands(*arc)))


def ext_witness(move: Move) -> SESWitness:
    """The non-split sequence whose middle term is the smaller object."""
    (M, R), (N, S) = move.source
    if move.kind in "AB":
        sub, quot = (N, S), (M, R)
    else:
        sub, quot = (M, R), (N, S)
    return SESWitness(_summands(sub), move.added, _summands(quot))
