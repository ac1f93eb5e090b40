"""Hom dimensions, decompositions and difference matrices on the band.

Band positions are
    B(l, t)  for 1 <= t <= l - 2 <= N - 2   (bipickets),
    Pair(l)  for 2 <= l <= N                 (the spot of P2(l) + P0(l-1)),
    P1(t)    for 1 <= t <= N                 (the picket row),
with N the largest part of the ambient type.  For l > N the value at B(l, t)
equals the value at P1(t), so nothing above row N is stored.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .arcs import ArcDiagram, klein_of
from .partitions import Partition, conjugate, dim_end as dim_end_operator, moment
from .summands import B2, P0, P1, P2, Decomposition, Indecomposable
from .tableaux import KleinTableau

__all__ = [
    "BandMatrix",
    "decompose",
    "tableau_of_decomposition",
    "hom_dim",
    "hom_dim_obj",
    "hom_dim_objs",
    "delta_matrices",
    "mesh_defect",
    "dim_end",
    "dim_end_operator",
    "orbit_dim_embed",
    "orbit_dim_tableau",
]


def decompose(pi: KleinTableau) -> Decomposition:
    """Split a Klein tableau into pickets and bipickets."""
    items = []
    used = Counter()
    for m, r in pi.arcs:
        if r <= m - 2:
            items.append(B2(m, r))
            used[m] += 1
            used[r] += 1
        else:
            items.append(P2(m))
            used[m] += 1
    for r in pi.poles:
        items.append(P1(r))
        used[r] += 1
    rest = Counter(pi.beta)
    rest.subtract(used)
    if any(v < 0 for v in rest.values()):
        raise ValueError("arc diagram uses columns the ambient type does not have")
    items += [P0(m) for m in rest.elements()]
    return Decomposition(tuple(items))


def tableau_of_decomposition(d: Decomposition) -> KleinTableau:
    beta = d.beta
    alpha = d.alpha
    arcs, poles = [], []
    for x in d:
        if x.kind == "B2":
            arcs.append((x.m, x.r))
        elif x.kind == "P2":
            arcs.append((x.m, x.m - 1))
        elif x.kind == "P1":
            poles.append(x.m)
    e = beta[0] if beta else 0
    b = conjugate(beta)
    ones = Counter(r for _, r in arcs) + Counter(poles)
    twos = Counter(m for m, _ in arcs)
    grows = [b.part(j) - ones.get(j, 0) - twos.get(j, 0) for j in range(1, e + 1)]
    gamma = conjugate(Partition(grows))
    return klein_of(ArcDiagram(e, tuple(arcs), tuple(poles)), (alpha, beta, gamma))


def hom_dim(x: Indecomposable, y: Indecomposable) -> int:
    """Dimension of Hom(x, y) from the closed-form table."""
    l, t = x.m, x.r
    m, r = y.m, y.r
    X, Y = x.kind, y.kind
    if X == "P0":
        if Y == "B2":
            return min(l, m) + min(l, r)
        return min(l, m)
    if X == "P2":
        if Y == "P0":
            return min(l - 2, m)
        if Y == "P2":
            return min(l, m)
        if Y == "B2":
            return min(l - 1, m) + min(l - 1, r)
        return min(l - 1, m)
    if X == "B2":
        if Y == "P0":
            return min(l - 1, m) + min(t - 1, m)
        if Y == "P2":
            return min(l, m) + min(t, m)
        if Y == "B2":
            corr = 1 if (l > m and t <= r) else 0
            return min(l - 1, m) + min(t, m) + min(l - 1, r) + min(t, r) - corr
        return min(l - 1, m) + min(t, m)
    # P1
    if Y == "P0":
        return min(l - 1, m)
    if Y == "P2":
        return min(l, m)
    if Y == "B2":
        return min(l, m) + min(l - 1, r)
    return min(l, m)


def hom_dim_obj(x: Indecomposable, m: Decomposition) -> int:
    return sum(hom_dim(x, y) for y in m)


def hom_dim_objs(m1: Decomposition, m2: Decomposition) -> int:
    return sum(hom_dim(x, y) for x in m1 for y in m2)


def dim_end(m: Decomposition) -> int:
    return hom_dim_objs(m, m)


def orbit_dim_embed(pi: KleinTableau) -> int:
    """dim End(N_alpha) + dim End(N_beta) - dim End(M)."""
    a, b, _ = pi.type()
    return dim_end_operator(a) + dim_end_operator(b) - dim_end(decompose(pi))


def orbit_dim_tableau(pi: KleinTableau) -> int:
    """n(beta) - n(alpha) - n(gamma) minus the number of crossings."""
    a, b, g = pi.type()
    return moment(b) - moment(a) - moment(g) - pi.crossings


# ---------------------------------------------------------------- band


def band_positions(N: int) -> list:
    """Test objects whose Hom dimensions decide the order for height N."""
    out = [("B", l, t) for l in range(3, N + 1) for t in range(1, l - 1)]
    out += [("P1", t) for t in range(1, N + 1)]
    return out


def test_object(pos) -> Indecomposable:
    return B2(pos[1], pos[2]) if pos[0] == "B" else P1(pos[1])


@dataclass
class BandMatrix:
    N: int
    B: dict = field(default_factory=dict)
    P1: dict = field(default_factory=dict)
    pair: dict = field(default_factory=dict)
    P0: dict = field(default_factory=dict)

    def at(self, l: int, t: int):
        """Value at B(l, t) with Pair and stability conventions."""
        if t == l - 1:
            v = self.pair.get(l, 0)
            return v if isinstance(v, int) else 0
        if t < 1 or t > l - 1:
            raise KeyError((l, t))
        if l > self.N:
            return self.P1.get(t, 0)
        return self.B.get((l, t), 0)

    def p1(self, t: int) -> int:
        return self.P1.get(t, 0)

    def nonzero(self) -> dict:
        out = {f"B{k}": v for k, v in self.B.items() if v}
        out.update({f"P1({k})": v for k, v in self.P1.items() if v})
        return out

    def to_json(self) -> dict:
        d = {
            "N": self.N,
            "B": {f"{l},{t}": v for (l, t), v in sorted(self.B.items())},
            "P1": {str(t): v for t, v in sorted(self.P1.items())},
        }
        if self.pair:
            d["Pair"] = {str(l): (list(v) if isinstance(v, tuple) else v) for l, v in sorted(self.pair.items())}
        if self.P0:
            d["P0"] = {str(m): v for m, v in sorted(self.P0.items())}
        return d


def as_decomposition(x) -> Decomposition:
    return x if isinstance(x, Decomposition) else decompose(x)


def object_type(x):
    if isinstance(x, KleinTableau):
        return x.type()
    return tableau_of_decomposition(x).type()


class TypeMismatch(ValueError):
    pass


def delta_matrices(y, z) -> tuple:
    """(deltaH, deltaM) with deltaH_X = [X,Z] - [X,Y] and deltaM = mu(Z) - mu(Y)."""
    if object_type(y) != object_type(z):
        raise TypeMismatch("objects of different partition type")
    Y, Z = as_decomposition(y), as_decomposition(z)
    beta = Z.beta
    N = beta[0] if beta else 0
    dH = BandMatrix(N)
    for l in range(3, N + 1):
        for t in range(1, l - 1):
            x = B2(l, t)
            dH.B[(l, t)] = hom_dim_obj(x, Z) - hom_dim_obj(x, Y)
    for l in range(2, N + 1):
        v = 0
        for x in (P2(l), P0(l - 1)):
            v += hom_dim_obj(x, Z) - hom_dim_obj(x, Y)
        dH.pair[l] = v
    for t in range(1, N + 1):
        dH.P1[t] = hom_dim_obj(P1(t), Z) - hom_dim_obj(P1(t), Y)
    cz, cy = Z.counts(), Y.counts()

    def dm(x):
        return cz.get(x, 0) - cy.get(x, 0)

    dM = BandMatrix(N)
    for l in range(3, N + 1):
        for t in range(1, l - 1):
            dM.B[(l, t)] = dm(B2(l, t))
    for l in range(2, N + 1):
        dM.pair[l] = (dm(P2(l)), dm(P0(l - 1)))
    for t in range(1, N + 1):
        dM.P1[t] = dm(P1(t))
        dM.P0[t] = dm(P0(t))
    return dH, dM


def mesh_defect(dH: BandMatrix, pos) -> int:
    """dH(l,t) + dH(l+1,t+1) - dH(l,t+1) - dH(l+1,t) at B(l, t)."""
    l, t = pos[-2], pos[-1]
    return dH.at(l, t) + dH.at(l + 1, t + 1) - dH.at(l, t + 1) - dH.at(l + 1, t)


@lru_cache(maxsize=None)
def hom_vector(pi: KleinTableau) -> tuple:
    """[X, M] over band_positions(beta_1), cached per tableau."""
    M = decompose(pi)
    N = pi.lr.height
    return tuple(hom_dim_obj(test_object(p), M) for p in band_positions(N))
