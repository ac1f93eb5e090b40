"""Brute-force counts over F_p that cross-check the combinatorics.

Points of the variety of embeddings N_alpha -> N_beta with cokernel of
type gamma are enumerated over a basis of the intertwiner space.  Each point
is classified by its Hom dimensions against the band test objects, which
separate the Klein tableaux of one type.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ..category import band_positions, hom_vector, test_object
from ..partitions import Partition, as_partition, moment
from ..summands import Decomposition, Indecomposable
from ..tableaux import KleinTableau, enumerate_lr, refinements
from .kernels import rank_batch
from .linalg import check_prime, nullspace_mod_p, rank_mod_p, rref
from .operators import EmbeddingPoint, _offsets, intertwiner_basis, jordan_matrix, realize

DEFAULT_BUDGET = 2**25


class BudgetExceeded(ValueError):
    pass


class ClassificationError(RuntimeError):
    pass


def _as_point(obj, p: int) -> EmbeddingPoint:
    if isinstance(obj, EmbeddingPoint):
        return obj
    if isinstance(obj, KleinTableau):
        from ..category import decompose

        obj = decompose(obj)
    return realize(obj, p)


def hom_space_dim_ff(x, y, p: int = 2) -> int:
    """dim Hom(x, y) by solving f_y psi1 = psi2 f_x over F_p."""
    x, y = _as_point(x, p), _as_point(y, p)
    p = x.p
    if y.p != p:
        raise ValueError("points over different fields")
    b1 = intertwiner_basis(x.alpha_blocks, y.alpha_blocks)
    b2 = intertwiner_basis(x.beta_blocks, y.beta_blocks)
    if not b1 and not b2:
        return 0
    fx, fy = x.f, y.f
    cols = [(fy @ g).ravel() for g in b1] + [(-(h @ fx)).ravel() for h in b2]
    system = np.array(cols, dtype=np.int64).T % p
    if system.size == 0:
        return len(cols)
    return len(cols) - rank_mod_p(system, p)


def aut_count(lam, q: int) -> int:
    """Order of the automorphism group of the operator of type lam over F_q."""
    lam = as_partition(lam)
    q = check_prime(q)
    e = lam.size + 2 * moment(lam)
    num = 1
    for m in lam.multiplicities().values():
        e -= m * (m + 1) // 2
        for j in range(1, m + 1):
            num *= q**j - 1
    return q**e * num


# ------------------------------------------------------------ test objects


def _kernel_power_basis(blocks, k: int) -> list[np.ndarray]:
    """Basis vectors of ker T^k: the bottom min(k, b) vectors of each block."""
    n = sum(blocks)
    out = []
    for off, b in zip(_offsets(blocks), blocks):
        for i in range(min(k, b)):
            v = np.zeros(n, dtype=np.int64)
            v[off + i] = 1
            out.append(v)
    return out


def _test_subspace(x: Indecomposable, blocks, p: int):
    """(dim S, W) so that dim Hom(x, M) = dim S - rank[W | f] + |alpha|."""
    a = jordan_matrix(blocks)

    def tpow(k):
        return np.linalg.matrix_power(a, k) % p if k else np.eye(len(a), dtype=np.int64)

    if x.kind == "P1":
        ker = _kernel_power_basis(blocks, x.m)
        w = [tpow(x.m - 1) @ v % p for v in ker]
        dim_s = len(ker)
    elif x.kind == "B2":
        k1 = _kernel_power_basis(blocks, x.m)
        k2 = _kernel_power_basis(blocks, x.r)
        w = [tpow(x.m - 2) @ v % p for v in k1] + [tpow(x.r - 1) @ v % p for v in k2]
        dim_s = len(k1) + len(k2)
    else:
        raise ValueError(f"{x} is not a band test object")
    w = np.array(w, dtype=np.int64).T.reshape(sum(blocks), -1)
    return dim_s, w


@dataclass
class Scan:
    """Everything an enumeration found."""

    alpha: Partition
    beta: Partition
    gamma: Partition
    p: int
    points: int = 0
    injective: int = 0
    in_variety: int = 0
    counts: Counter = field(default_factory=Counter)
    representatives: dict = field(default_factory=dict)


def _coords(p: int, d: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((len(idx), d), dtype=np.int64)
    for k in range(d):
        out[:, k] = idx % p
        idx //= p
    return out


def scan(alpha, beta, gamma, p: int, budget: int = DEFAULT_BUDGET, chunk: int = 8192) -> Scan:
    alpha, beta, gamma = (as_partition(x) for x in (alpha, beta, gamma))
    p = check_prime(p)
    na, nb = alpha.size, beta.size
    basis = intertwiner_basis(alpha, beta)
    d = len(basis)
    total = p**d
    if total > budget:
        raise BudgetExceeded(f"{p}^{d} points exceed the budget {budget}")
    result = Scan(alpha, beta, gamma, p)
    tableaux = [pi for lr in enumerate_lr(alpha, beta, gamma) for pi in refinements(lr)]
    if na + gamma.size != nb:
        return result
    predicted = {}
    for pi in tableaux:
        v = hom_vector(pi)
        if v in predicted:
            raise ClassificationError(f"tableaux {predicted[v]} and {pi} share a Hom vector")
        predicted[v] = pi
    positions = band_positions(beta[0] if beta else 0)
    tests = [_test_subspace(test_object(pos), beta, p) for pos in positions]
    a = jordan_matrix(beta)
    powers = [np.linalg.matrix_power(a, k) % p for k in range(1, (beta[0] if beta else 0) + 1)]
    expect = [na + sum(max(g - k, 0) for g in gamma) for k in range(1, len(powers) + 1)]
    bmat = np.array(basis, dtype=np.int64).reshape(d, nb * na) if d else np.zeros((0, nb * na), np.int64)
    for start in range(0, total, chunk):
        stop = min(total, start + chunk)
        c = _coords(p, d, start, stop)
        f = (c @ bmat % p).reshape(len(c), nb, na)
        result.points += len(c)
        ok = rank_batch(f, p) == na if na else np.ones(len(c), dtype=bool)
        result.injective += int(ok.sum())
        for pk, want in zip(powers, expect):
            if not ok.any():
                break
            sub = f[ok]
            r = rank_batch(np.concatenate([np.broadcast_to(pk, (len(sub),) + pk.shape), sub], axis=2), p)
            ok[np.flatnonzero(ok)[r != want]] = False
        sel = np.flatnonzero(ok)
        result.in_variety += len(sel)
        if not len(sel):
            continue
        sub = f[sel]
        vecs = []
        for dim_s, w in tests:
            r = rank_batch(np.concatenate([np.broadcast_to(w, (len(sub),) + w.shape), sub], axis=2), p)
            vecs.append(dim_s - r + na)
        vecs = np.array(vecs, dtype=np.int64).T.reshape(len(sel), len(tests))
        for k, v in enumerate(map(tuple, vecs.tolist())):
            pi = predicted.get(v)
            if pi is None:
                raise ClassificationError(f"point {c[sel[k]].tolist()} has Hom vector {v} matching no tableau")
            result.counts[pi] += 1
            if pi not in result.representatives:
                result.representatives[pi] = sub[k].copy()
    return result


def enumerate_and_classify(alpha, beta, gamma, p: int = 2, budget: int = DEFAULT_BUDGET) -> dict:
    """Number of F_p-points in each orbit, keyed by Klein tableau."""
    return dict(scan(alpha, beta, gamma, p, budget).counts)


# ------------------------------------------------------------ stabilizers


def _preserving_endomorphisms(f: np.ndarray, alpha, beta, p: int) -> list[np.ndarray]:
    """Basis of {h in End(N_beta) : h(im f) in im f}."""
    hb = intertwiner_basis(beta, beta)
    gb = intertwiner_basis(alpha, alpha)
    cols = [(h @ f).ravel() for h in hb] + [(-(f @ g)).ravel() for g in gb]
    if not cols:
        return []
    system = np.array(cols, dtype=np.int64).T % p
    if system.shape[0] == 0:
        null = np.eye(len(cols), dtype=np.int64)
    else:
        null = nullspace_mod_p(system, p)
    # f is injective, so each solution is determined by its h-part
    return [sum(int(c) * h for c, h in zip(row[: len(hb)], hb)) % p for row in null]


def _span_basis(vectors: list[np.ndarray], p: int) -> np.ndarray:
    if not vectors:
        return np.zeros((0, 0), dtype=np.int64)
    r, piv = rref(np.array([v.ravel() for v in vectors]), p)
    return r[: len(piv)]


def count_units_brute(basis: list[np.ndarray], p: int, budget: int = 2**22) -> int:
    d = len(basis)
    if d == 0:
        return 1
    if p**d > budget:
        raise BudgetExceeded(f"{p}^{d} endomorphisms exceed the budget {budget}")
    n = basis[0].shape[0]
    stack = np.array(basis, dtype=np.int64).reshape(d, n * n)
    units = 0
    chunk = 4096
    for start in range(0, p**d, chunk):
        c = _coords(p, d, start, min(p**d, start + chunk))
        m = (c @ stack % p).reshape(len(c), n, n)
        units += int((rank_batch(m, p) == n).sum())
    return units


def _gl_order(n: int, p: int) -> int:
    out = 1
    for i in range(n):
        out *= p**n - p**i
    return out


def _count_invertible(span: np.ndarray, sizes: list, p: int, budget: int) -> int:
    """Elements of a span of block-diagonal matrices with every block invertible."""
    d = len(span)
    if sum(k * k for k in sizes) == d and len(sizes) == 1:
        return _gl_order(sizes[0], p)
    if p**d > budget:
        raise BudgetExceeded(f"{p}^{d} top maps exceed the budget {budget}")
    cuts = np.cumsum([0] + [k * k for k in sizes])
    ok_total = 0
    for start in range(0, p**d, 4096):
        c = _coords(p, d, start, min(p**d, start + 4096))
        m = c @ span % p
        ok = np.ones(len(c), dtype=bool)
        for k, a, b in zip(sizes, cuts, cuts[1:]):
            ok &= rank_batch(np.ascontiguousarray(m[:, a:b]).reshape(len(c), k, k), p) == k
        ok_total += int(ok.sum())
    return ok_total


def count_units_top(basis: list[np.ndarray], beta, p: int, budget: int = 2**22) -> int:
    """Units of an algebra of endomorphisms of N_beta.

    Modulo the radical, End(N_beta) is the product of the matrix algebras
    acting on the tops of equally sized blocks.  An element of a subalgebra
    is a unit iff each of those top blocks is invertible, so only the image
    in that product is scanned, factor by factor when the image splits.
    """
    beta = tuple(beta)
    if not basis:
        return 1
    tops = [o + b - 1 for o, b in zip(_offsets(beta), beta)]
    groups = {}
    for size, top in zip(beta, tops):
        groups.setdefault(size, []).append(top)
    idx = list(groups.values())
    sizes = [len(g) for g in idx]
    images = [np.concatenate([h[np.ix_(g, g)].ravel() for g in idx]) % p for h in basis]
    span = _span_basis(images, p)
    dim_ker = len(basis) - len(span)
    cuts = np.cumsum([0] + [k * k for k in sizes])
    parts = [_span_basis([v[a:b] for v in span], p) for a, b in zip(cuts, cuts[1:])]
    if sum(len(q) for q in parts) == len(span):
        good = 1
        for q, k in zip(parts, sizes):
            good *= _count_invertible(q, [k], p, budget)
    else:
        good = _count_invertible(span, sizes, p, budget)
    return p**dim_ker * good


def stabilizer_count(f: np.ndarray, alpha, beta, p: int, method: str = "top") -> int:
    """Number of pairs (g, h) of automorphisms with h f = f g."""
    alpha, beta = as_partition(alpha), as_partition(beta)
    basis = _preserving_endomorphisms(np.asarray(f, dtype=np.int64).reshape(beta.size, alpha.size), alpha, beta, p)
    if method == "brute":
        return count_units_brute(basis, p)
    return count_units_top(basis, beta, p)


@dataclass
class OrbitReport:
    alpha: Partition
    beta: Partition
    gamma: Partition
    p: int
    group_order: int
    rows: list
    points: int
    in_variety: int

    @property
    def ok(self) -> bool:
        return all(r["identity_ok"] for r in self.rows)

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "gamma": list(self.gamma),
            "p": self.p,
            "group_order": self.group_order,
            "points": self.points,
            "in_variety": self.in_variety,
            "ok": self.ok,
            "orbits": self.rows,
        }


def orbit_identity_check(alpha, beta, gamma, p: int = 2, budget: int = DEFAULT_BUDGET, cross_check: bool = False):
    """count(Pi) * #stab(Pi) against a_alpha(p) * a_beta(p) for every orbit."""
    s = scan(alpha, beta, gamma, p, budget)
    group = aut_count(s.alpha, p) * aut_count(s.beta, p)
    rows = []
    for pi in sorted(s.counts, key=KleinTableau.sort_key):
        f = s.representatives[pi]
        stab = stabilizer_count(f, s.alpha, s.beta, p)
        row = {
            "arcs": [list(a) for a in pi.arcs],
            "poles": list(pi.poles),
            "count": s.counts[pi],
            "stabilizer": stab,
            "identity_ok": s.counts[pi] * stab == group,
        }
        if cross_check:
            try:
                brute = stabilizer_count(f, s.alpha, s.beta, p, method="brute")
            except BudgetExceeded:
                brute = None
            row["stabilizer_brute"] = brute
            if brute is not None:
                row["identity_ok"] = row["identity_ok"] and brute == stab
        rows.append(row)
    return OrbitReport(s.alpha, s.beta, s.gamma, p, group, rows, s.points, s.in_variety)
